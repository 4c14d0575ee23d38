#pragma once

// Small graphs shared across test files.

#include <utility>
#include <vector>

#include "percolation/graph.hpp"

namespace percolation::fixtures {

inline Graph triangle() {
    std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {1, 2}, {2, 0}};
    return Graph::from_edges(3, e);
}

/// Two triangles sharing only node 2.
inline Graph bowtie() {
    std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
    return Graph::from_edges(5, e);
}

/// Two triangles sharing the edge 1-2.
inline Graph two_triangles_shared_edge() {
    std::vector<std::pair<NodeId, NodeId>> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    return Graph::from_edges(4, e);
}

inline Graph complete(std::int32_t n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

/// K6 with edges (0,1) and (2,3) removed: exactly four maximal 4-cliques.
inline Graph k6_minus_two_edges() {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 0; i < 6; ++i)
        for (NodeId j = i + 1; j < 6; ++j) {
            if (i == 0 && j == 1) continue;
            if (i == 2 && j == 3) continue;
            e.emplace_back(i, j);
        }
    return Graph::from_edges(6, e);
}

inline Graph star(std::int32_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

}  // namespace percolation::fixtures
