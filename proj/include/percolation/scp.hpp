#pragma once

#include <cstdint>

#include "percolation/engines.hpp"
#include "percolation/graph.hpp"
#include "percolation/types.hpp"

namespace percolation {

/// Outcome of sequential-clique-percolation style detection: communities as
/// components of the bipartite containment graph between k-cliques and their
/// (k-1)-sub-cliques, restricted to the k-clique side.
struct ScpResult {
    std::vector<Clique> k_cliques;
    Cover cover;                       // over indices into k_cliques
    RunStats stats;
    std::uint64_t distinct_subcliques = 0;  // size of the (k-1)-clique side
};

/// Percolates over all k-cliques of the graph: every k-clique is linked to
/// each of its k sub-cliques of size k-1, and two k-cliques sharing one are
/// in the same community. Implemented batch-style with union-find over
/// canonical (k-1)-clique keys. Independent of the maximal-clique engines;
/// the node-community family it produces must equal theirs.
ScpResult scp_percolate(const Graph& g, std::int32_t k,
                        std::uint64_t cap = kDefaultCliqueCap);

}  // namespace percolation
