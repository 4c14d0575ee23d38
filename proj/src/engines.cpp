#include "percolation/engines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace percolation {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::int32_t find(std::int32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true when the two sets were distinct and got merged.
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int64_t> size_;
};

}  // namespace

bool intersection_at_least(const Clique& a, const Clique& b, std::int32_t threshold) {
    if (threshold <= 0) return true;
    std::int32_t need = threshold;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (std::min(a.end() - ia, b.end() - ib) < need) return false;
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else {
            if (--need == 0) return true;
            ++ia;
            ++ib;
        }
    }
    return false;
}

std::int32_t intersection_size(const Clique& a, const Clique& b) {
    std::int32_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

Cover make_cover(std::span<const Clique> cliques, std::int32_t k,
                 std::span<const std::int32_t> raw_component_of) {
    Cover cover;
    cover.k = k;
    cover.component_of.assign(cliques.size(), Cover::kUnassigned);

    std::vector<std::int32_t> canonical;  // raw id -> canonical id, lazily grown
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const std::int32_t raw = raw_component_of[i];
        if (raw == Cover::kUnassigned) continue;
        if (static_cast<std::size_t>(raw) >= canonical.size())
            canonical.resize(raw + 1, Cover::kUnassigned);
        if (canonical[raw] == Cover::kUnassigned) {
            canonical[raw] = static_cast<std::int32_t>(cover.communities.size());
            cover.communities.emplace_back();
        }
        const std::int32_t id = canonical[raw];
        cover.component_of[i] = id;
        cover.communities[id].push_back(static_cast<CliqueId>(i));
    }

    cover.node_sets.resize(cover.communities.size());
    for (std::size_t c = 0; c < cover.communities.size(); ++c) {
        auto& nodes = cover.node_sets[c];
        for (CliqueId ci : cover.communities[c])
            nodes.insert(nodes.end(), cliques[ci].begin(), cliques[ci].end());
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    }
    return cover;
}

std::vector<std::vector<NodeId>> node_families(const Cover& cover) {
    auto families = cover.node_sets;
    std::sort(families.begin(), families.end());
    return families;
}

PercolationResult naive_percolate(const CliqueStore& store, std::int32_t k,
                                  std::uint64_t cap) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    const auto start = Clock::now();

    std::vector<CliqueId> eligible;
    for (std::size_t i = 0; i < store.size(); ++i)
        if (store.cliques[i].size() >= static_cast<std::size_t>(k))
            eligible.push_back(static_cast<CliqueId>(i));
    if (eligible.size() > cap)
        throw CapExceeded("naive-cap", cap);

    RunStats stats;
    UnionFind uf(eligible.size());
    const std::int32_t threshold = k - 1;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        for (std::size_t j = i + 1; j < eligible.size(); ++j) {
            ++stats.candidate_pairs;
            if (intersection_at_least(store.cliques[eligible[i]],
                                      store.cliques[eligible[j]], threshold)) {
                if (uf.unite(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)))
                    ++stats.successful_tests;
            } else {
                ++stats.failed_tests;
            }
        }
    }

    std::vector<std::int32_t> raw(store.size(), Cover::kUnassigned);
    for (std::size_t i = 0; i < eligible.size(); ++i)
        raw[eligible[i]] = uf.find(static_cast<std::int32_t>(i));

    PercolationResult result;
    result.cover = make_cover(store.cliques, k, raw);
    stats.components = static_cast<std::int64_t>(result.cover.communities.size());
    stats.assigned_cliques = static_cast<std::int64_t>(eligible.size());
    stats.elapsed_ms = ms_since(start);
    result.stats = stats;
    return result;
}

IncidenceState::IncidenceState(const CliqueStore& store, std::int32_t k)
    : store_(&store),
      lists_(store.node_incidence.size()),
      slots_(store.size()),
      visited_(store.size(), 0),
      stamp_(store.size(), 0) {
    for (std::size_t c = 0; c < store.size(); ++c) {
        const Clique& members = store.cliques[c];
        if (members.size() < static_cast<std::size_t>(k)) {
            visited_[c] = 1;  // too small to participate at this k
            continue;
        }
        slots_[c].resize(members.size());
        for (std::size_t j = 0; j < members.size(); ++j) {
            auto& list = lists_[members[j]];
            slots_[c][j] = static_cast<std::int32_t>(list.size());
            list.push_back(static_cast<CliqueId>(c));
        }
    }
}

std::vector<CliqueId> IncidenceState::unvisited_adjacent(CliqueId clique) {
    ++token_;
    std::vector<CliqueId> out;
    for (NodeId v : store_->cliques[clique]) {
        for (CliqueId other : lists_[v]) {
            if (other == clique) continue;
            if (stamp_[other] != token_) {
                stamp_[other] = token_;
                out.push_back(other);
            }
        }
    }
    return out;
}

void IncidenceState::mark_visited(CliqueId clique) {
    const Clique& members = store_->cliques[clique];
    for (std::size_t j = 0; j < members.size(); ++j) {
        auto& list = lists_[members[j]];
        const std::int32_t slot = slots_[clique][j];
        const CliqueId moved = list.back();
        list[slot] = moved;
        list.pop_back();
        if (moved != clique) {
            const Clique& moved_members = store_->cliques[moved];
            const auto it = std::lower_bound(moved_members.begin(),
                                             moved_members.end(), members[j]);
            slots_[moved][it - moved_members.begin()] = slot;
        }
    }
    visited_[clique] = 1;
}

PercolationResult incidence_percolate(const CliqueStore& store, std::int32_t k) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    if (store.min_size > k)
        throw std::invalid_argument("store min_size exceeds k");
    const auto start = Clock::now();

    IncidenceState state(store, k);
    RunStats stats;
    std::vector<std::int32_t> raw(store.size(), Cover::kUnassigned);
    std::vector<CliqueId> frontier;
    const std::int32_t threshold = k - 1;
    std::int32_t next_component = 0;

    for (std::size_t seed = 0; seed < store.size(); ++seed) {
        if (store.cliques[seed].size() < static_cast<std::size_t>(k)) continue;
        if (state.visited(static_cast<CliqueId>(seed))) continue;

        const std::int32_t component = next_component++;
        raw[seed] = component;
        state.mark_visited(static_cast<CliqueId>(seed));
        ++stats.assigned_cliques;
        frontier.assign(1, static_cast<CliqueId>(seed));

        while (!frontier.empty()) {
            const CliqueId current = frontier.back();
            frontier.pop_back();
            for (CliqueId candidate : state.unvisited_adjacent(current)) {
                ++stats.candidate_pairs;
                if (intersection_at_least(store.cliques[current],
                                          store.cliques[candidate], threshold)) {
                    ++stats.successful_tests;
                    raw[candidate] = component;
                    state.mark_visited(candidate);
                    ++stats.assigned_cliques;
                    frontier.push_back(candidate);
                } else {
                    ++stats.failed_tests;
                }
            }
        }
    }

    PercolationResult result;
    result.cover = make_cover(store.cliques, k, raw);
    stats.components = next_component;
    stats.elapsed_ms = ms_since(start);
    result.stats = stats;
    return result;
}

}  // namespace percolation
