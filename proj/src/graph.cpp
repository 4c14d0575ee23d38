#include "percolation/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace percolation {

namespace {

Graph build_from_pairs(std::vector<std::string> labels,
                       std::vector<std::pair<NodeId, NodeId>>& edges,
                       ParseReport* report) {
    std::uint64_t self_loops = 0;
    std::size_t kept = 0;
    for (auto& e : edges) {
        if (e.first == e.second) {
            ++self_loops;
            continue;
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        edges[kept++] = e;
    }
    edges.resize(kept);
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    const std::uint64_t duplicates = static_cast<std::uint64_t>(edges.end() - last);
    edges.erase(last, edges.end());

    if (report != nullptr) {
        report->self_loops += self_loops;
        report->duplicate_edges += duplicates;
    }

    Graph g;
    g.labels_ = std::move(labels);
    const auto n = static_cast<std::size_t>(g.labels_.size());
    std::vector<std::int32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[n]));
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adjacency_.begin() + g.offsets_[i],
                  g.adjacency_.begin() + g.offsets_[i + 1]);
    g.edge_count_ = static_cast<std::int64_t>(edges.size());
    return g;
}

}  // namespace

Graph Graph::from_edges(std::int32_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::string> labels(static_cast<std::size_t>(node_count));
    for (std::int32_t i = 0; i < node_count; ++i)
        labels[i] = std::to_string(i);
    std::vector<std::pair<NodeId, NodeId>> copy(edges.begin(), edges.end());
    return build_from_pairs(std::move(labels), copy, nullptr);
}

std::int32_t Graph::degree(NodeId v) const {
    if (v < 0 || v >= node_count())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

NodeId GraphBuilder::intern(const std::string& label) {
    auto [it, inserted] = id_of_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
}

void GraphBuilder::add_edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(intern(a), intern(b));
}

Graph GraphBuilder::build() {
    return build_from_pairs(std::move(labels_), edges_, &report_);
}

Graph parse_edge_list(std::istream& in, ParseReport* report) {
    GraphBuilder builder;
    ParseReport local;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            ++local.comment_lines;
            continue;
        }
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a >> b) || (tokens >> extra))
            throw ParseError(line_no, "expected exactly 2 tokens");
        builder.add_edge(a, b);
    }
    Graph g = builder.build();
    if (report != nullptr) {
        *report = builder.report();
        report->comment_lines = local.comment_lines;
    }
    return g;
}

Graph load_edge_list(const std::filesystem::path& path, ParseReport* report) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return parse_edge_list(in, report);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            const std::string& a = g.label(u);
            const std::string& b = g.label(v);
            if (a <= b)
                out << a << '\t' << b << '\n';
            else
                out << b << '\t' << a << '\n';
        }
    }
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeId>> components;
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace percolation
