#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "percolation/types.hpp"

namespace percolation {

/// What the edge-list parser dropped or skipped. Duplicates and self-loops
/// are not errors in empirical files; they are counted here instead.
struct ParseReport {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
    std::uint64_t comment_lines = 0;
};

/// Undirected simple graph over dense integer node ids, with the original
/// external labels retained for output. Adjacency lists are strictly
/// ascending. Immutable after construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on nodes 0..node_count-1 with decimal-string labels.
    /// Self-loops and duplicate edges are silently dropped.
    static Graph from_edges(std::int32_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges);

    std::int32_t node_count() const noexcept {
        return static_cast<std::int32_t>(labels_.size());
    }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    /// Throws std::out_of_range when v is not a node.
    std::int32_t degree(NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId v) const { return labels_.at(v); }

private:
    friend class GraphBuilder;

    std::vector<std::int64_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<std::string> labels_;
    std::int64_t edge_count_ = 0;
};

/// Accumulates labeled edges, assigning dense ids in first-appearance order,
/// then builds the deduplicated Graph.
class GraphBuilder {
public:
    NodeId intern(const std::string& label);
    void add_edge(const std::string& a, const std::string& b);
    Graph build();

    const ParseReport& report() const noexcept { return report_; }

private:
    std::unordered_map<std::string, NodeId> id_of_;
    std::vector<std::string> labels_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    ParseReport report_;
};

/// Parses whitespace-separated edge-list text. Lines starting with '#' are
/// comments (SNAP convention); a line with anything other than two tokens is
/// a ParseError carrying the line number. Empty input gives an empty graph.
Graph parse_edge_list(std::istream& in, ParseReport* report = nullptr);
Graph load_edge_list(const std::filesystem::path& path, ParseReport* report = nullptr);

/// Writes one line per undirected edge, "a<TAB>b", lexicographically smaller
/// label first.
void write_edge_list(const Graph& g, std::ostream& out);

/// Plain connected components over nodes, each sorted ascending, in order of
/// smallest contained node. This is what k=2 percolation degenerates to.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

}  // namespace percolation
