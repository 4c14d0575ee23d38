#include "percolation/clique_enum.hpp"

#include <algorithm>
#include <ostream>

namespace percolation {

namespace {

// Smallest-degree-first elimination order, ties broken by node id.
std::vector<NodeId> degeneracy_order(const Graph& g) {
    const std::int32_t n = g.node_count();
    std::vector<std::int32_t> deg(n);
    std::int32_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = static_cast<std::int32_t>(g.neighbors(v).size());
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<NodeId>> buckets(static_cast<std::size_t>(max_deg) + 1);
    for (NodeId v = n - 1; v >= 0; --v) buckets[deg[v]].push_back(v);

    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<char> removed(n, 0);
    std::int32_t cursor = 0;
    while (static_cast<std::int32_t>(order.size()) < n) {
        while (cursor > 0 && !buckets[cursor - 1].empty()) --cursor;
        while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
        NodeId v = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (removed[v] || deg[v] != cursor) continue;  // stale bucket entry
        removed[v] = 1;
        order.push_back(v);
        for (NodeId w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                buckets[deg[w]].push_back(w);
            }
        }
    }
    return order;
}

std::vector<NodeId> sorted_intersection(std::span<const NodeId> a,
                                        std::span<const NodeId> b) {
    std::vector<NodeId> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::size_t intersection_count(std::span<const NodeId> a, std::span<const NodeId> b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, std::int32_t min_size, std::uint64_t cap)
        : g_(g), min_size_(min_size), cap_(cap) {}

    std::vector<Clique> run() {
        const auto order = degeneracy_order(g_);
        std::vector<std::int32_t> pos(g_.node_count());
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[order[i]] = static_cast<std::int32_t>(i);

        for (NodeId v : order) {
            std::vector<NodeId> p, x;
            for (NodeId w : g_.neighbors(v)) {
                if (pos[w] > pos[v]) p.push_back(w);
                else x.push_back(w);
            }
            // neighbor lists are id-sorted already; p and x inherit that
            if (1 + static_cast<std::int32_t>(p.size()) < min_size_ && !x.empty())
                continue;
            current_.assign(1, v);
            expand(p, x);
        }
        return std::move(found_);
    }

private:
    void emit() {
        if (found_.size() >= cap_)
            throw CapExceeded("clique-cap", cap_);
        Clique c = current_;
        std::sort(c.begin(), c.end());
        found_.push_back(std::move(c));
    }

    void expand(std::vector<NodeId>& p, std::vector<NodeId>& x) {
        if (current_.size() + p.size() < static_cast<std::size_t>(min_size_))
            return;
        if (p.empty()) {
            if (x.empty()) emit();
            return;
        }

        // Pivot: the vertex of P∪X covering the most of P.
        NodeId pivot = -1;
        std::size_t best = 0;
        bool first = true;
        for (NodeId u : p) {
            const std::size_t c = intersection_count(p, g_.neighbors(u));
            if (first || c > best) { pivot = u; best = c; first = false; }
        }
        for (NodeId u : x) {
            const std::size_t c = intersection_count(p, g_.neighbors(u));
            if (first || c > best) { pivot = u; best = c; first = false; }
        }

        std::vector<NodeId> candidates;
        const auto pivot_nb = g_.neighbors(pivot);
        std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(),
                            std::back_inserter(candidates));

        for (NodeId v : candidates) {
            const auto nb = g_.neighbors(v);
            std::vector<NodeId> new_p = sorted_intersection(p, nb);
            std::vector<NodeId> new_x = sorted_intersection(x, nb);
            current_.push_back(v);
            expand(new_p, new_x);
            current_.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const Graph& g_;
    std::int32_t min_size_;
    std::uint64_t cap_;
    Clique current_;
    std::vector<Clique> found_;
};

}  // namespace

std::int32_t CliqueStore::max_clique_size() const {
    std::int32_t m = 0;
    for (const auto& c : cliques)
        m = std::max(m, static_cast<std::int32_t>(c.size()));
    return m;
}

CliqueStore enumerate_maximal_cliques(const Graph& g, std::int32_t min_size,
                                      std::uint64_t cap) {
    if (min_size < 1)
        throw std::invalid_argument("min_size must be >= 1");
    CliqueStore store;
    store.min_size = min_size;
    store.cliques = BronKerbosch(g, min_size, cap).run();
    store.node_incidence.resize(static_cast<std::size_t>(g.node_count()));
    for (std::size_t i = 0; i < store.cliques.size(); ++i)
        for (NodeId v : store.cliques[i])
            store.node_incidence[v].push_back(static_cast<CliqueId>(i));
    return store;
}

std::vector<Clique> enumerate_k_cliques(const Graph& g, std::int32_t k,
                                        std::uint64_t cap) {
    if (k < 2)
        throw std::invalid_argument("k must be >= 2");
    std::vector<Clique> out;
    Clique current;

    // Extends current with candidates (all > current.back() and adjacent to
    // every member); each k-clique is generated once, in ascending order.
    auto extend = [&](auto&& self, std::span<const NodeId> candidates) -> void {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const NodeId v = candidates[i];
            current.push_back(v);
            if (current.size() == static_cast<std::size_t>(k)) {
                if (out.size() >= cap)
                    throw CapExceeded("clique-cap", cap);
                out.push_back(current);
            } else {
                const auto nb = g.neighbors(v);
                std::vector<NodeId> next;
                std::set_intersection(candidates.begin() + i + 1, candidates.end(),
                                      nb.begin(), nb.end(), std::back_inserter(next));
                if (current.size() + next.size() >= static_cast<std::size_t>(k))
                    self(self, next);
            }
            current.pop_back();
        }
    };

    std::vector<NodeId> all(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    extend(extend, all);
    return out;
}

std::map<std::int32_t, std::uint64_t> clique_size_distribution(const CliqueStore& store) {
    return clique_size_distribution(std::span<const Clique>(store.cliques));
}

std::map<std::int32_t, std::uint64_t> clique_size_distribution(std::span<const Clique> cliques) {
    std::map<std::int32_t, std::uint64_t> hist;
    for (const auto& c : cliques)
        ++hist[static_cast<std::int32_t>(c.size())];
    return hist;
}

void write_clique_dump(const CliqueStore& store, const Graph& g, std::ostream& out) {
    std::vector<std::string> labels;
    for (const auto& c : store.cliques) {
        labels.clear();
        for (NodeId v : c) labels.push_back(g.label(v));
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0) out << ' ';
            out << labels[i];
        }
        out << '\n';
    }
}

}  // namespace percolation
