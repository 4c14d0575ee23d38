#include "percolation/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "percolation/clique_enum.hpp"
#include "percolation/clique_tree.hpp"
#include "percolation/scp.hpp"

namespace percolation {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t h = mix64(mix64(seed) ^ counter);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

Graph generate_gn(const GNParams& params) {
    if (params.num_communities < 1 || params.community_size < 2)
        throw std::invalid_argument("need at least 1 community of size >= 2");
    if (!(0.0 <= params.p_out && params.p_out <= params.p_in && params.p_in <= 1.0))
        throw std::invalid_argument("need 0 <= p_out <= p_in <= 1");

    const std::int64_t n =
        static_cast<std::int64_t>(params.num_communities) * params.community_size;
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const bool same_block = i / params.community_size == j / params.community_size;
            const double p = same_block ? params.p_in : params.p_out;
            const std::uint64_t counter = static_cast<std::uint64_t>(i) * n + j;
            if (counter_uniform(params.seed, counter) < p)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    return Graph::from_edges(static_cast<std::int32_t>(n), edges);
}

Graph erdos_renyi(std::int32_t n, double p, std::uint64_t seed) {
    if (n < 0 || !(0.0 <= p && p <= 1.0))
        throw std::invalid_argument("bad Erdos-Renyi parameters");
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i + 1; j < n; ++j)
            if (counter_uniform(seed, static_cast<std::uint64_t>(i) * n + j) < p)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return Graph::from_edges(n, edges);
}

Graph generate_random_intersection(const RIGParams& params) {
    if (params.num_nodes < 1 || params.num_groups < 0 ||
        params.min_group_size < 1 || params.max_group_size < params.min_group_size ||
        params.max_group_size > params.num_nodes)
        throw std::invalid_argument("bad random-intersection parameters");

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> members;
    std::uint64_t counter = 0;
    for (std::int32_t group = 0; group < params.num_groups; ++group) {
        const std::int32_t span = params.max_group_size - params.min_group_size + 1;
        const std::int32_t size =
            params.min_group_size +
            static_cast<std::int32_t>(counter_uniform(params.seed, counter++) * span);
        members.clear();
        while (static_cast<std::int32_t>(members.size()) < size) {
            const NodeId candidate = static_cast<NodeId>(
                counter_uniform(params.seed, counter++) * params.num_nodes);
            if (std::find(members.begin(), members.end(), candidate) == members.end())
                members.push_back(candidate);
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    }
    return Graph::from_edges(params.num_nodes, edges);
}

EdgeCount count_clique_graph_edges(const CliqueStore& store, std::int32_t k,
                                   const EdgeBudget& budget) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    if (budget.max_pairs == std::numeric_limits<std::uint64_t>::max() &&
        !(budget.max_seconds < std::numeric_limits<double>::infinity()))
        throw std::invalid_argument("at least one budget bound must be finite");

    const auto start = std::chrono::steady_clock::now();
    const std::int32_t threshold = k - 1;
    std::vector<char> eligible(store.size(), 0);
    for (std::size_t c = 0; c < store.size(); ++c)
        eligible[c] = store.cliques[c].size() >= static_cast<std::size_t>(k);

    std::vector<std::uint32_t> stamp(store.size(), 0);
    std::uint32_t token = 0;
    EdgeCount result;
    std::uint64_t tested = 0;
    for (std::size_t c = 0; c < store.size(); ++c) {
        if (!eligible[c]) continue;
        ++token;
        for (NodeId v : store.cliques[c]) {
            for (CliqueId other : store.node_incidence[v]) {
                if (static_cast<std::size_t>(other) <= c || !eligible[other]) continue;
                if (stamp[other] == token) continue;
                stamp[other] = token;
                if (intersection_at_least(store.cliques[c], store.cliques[other], threshold))
                    ++result.count;
                ++tested;
                if (tested >= budget.max_pairs) return result;
                if ((tested & 0xFFF) == 0) {
                    const double elapsed = std::chrono::duration<double>(
                                               std::chrono::steady_clock::now() - start)
                                               .count();
                    if (elapsed > budget.max_seconds) return result;
                }
            }
        }
    }
    result.exact = true;
    return result;
}

double largest_community_proportion(const Cover& cover) {
    if (cover.node_sets.empty())
        throw std::domain_error("cover has no communities");
    std::size_t largest = 0;
    std::vector<NodeId> all;
    for (const auto& nodes : cover.node_sets) {
        largest = std::max(largest, nodes.size());
        all.insert(all.end(), nodes.begin(), nodes.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<double>(largest) / static_cast<double>(all.size());
}

Graph non_composability_fixture() {
    // Seven 4-cliques chained by 3-node overlaps; their union contains the
    // triangle {0,1,2} (edge 0-1 from the first clique, 1-2 from the middle,
    // 0-2 from the last) but {0,1,2} has no common neighbor, so no clique of
    // the chain contains it. Node 9 is adjacent to exactly 0, 1 and 2.
    static constexpr std::int32_t kCliques[7][4] = {
        {0, 1, 3, 4}, {1, 3, 4, 5}, {1, 4, 5, 6}, {1, 2, 5, 6},
        {2, 5, 6, 7}, {2, 6, 7, 8}, {0, 2, 7, 8},
    };
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& clique : kCliques)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                edges.emplace_back(clique[i], clique[j]);
    for (NodeId v : {0, 1, 2})
        edges.emplace_back(v, 9);
    return Graph::from_edges(10, edges);
}

SweepReport equivalence_sweep(const Graph& g, std::int32_t k_min, std::int32_t k_max) {
    if (k_min < 3)
        throw std::invalid_argument("k_min must be >= 3");
    SweepReport report;
    report.k_min = k_min;

    CliqueStore store = enumerate_maximal_cliques(g, k_min);
    if (k_max < k_min) k_max = store.max_clique_size();
    report.k_max = k_max;
    if (store.size() == 0 || k_max < k_min) return report;

    CliqueTree tree(store);

    auto diff_witness = [](const std::vector<std::vector<NodeId>>& a,
                           const std::vector<std::vector<NodeId>>& b,
                           SweepMismatch& out) {
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out.only_in_a));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                            std::back_inserter(out.only_in_b));
    };

    for (std::int32_t k = k_min; k <= k_max; ++k) {
        auto naive = naive_percolate(store, k);
        auto incidence = incidence_percolate(store, k);
        tree.reset_visited();
        auto treed = tree_percolate(tree, store, k);
        auto scp = scp_percolate(g, k);

        report.rows.push_back({k, "naive", naive.stats});
        report.rows.push_back({k, "alg1", incidence.stats});
        report.rows.push_back({k, "alg2", treed.stats});
        report.rows.push_back({k, "scp", scp.stats});

        const auto reference = node_families(naive.cover);
        const std::pair<const char*, std::vector<std::vector<NodeId>>> others[] = {
            {"alg1", node_families(incidence.cover)},
            {"alg2", node_families(treed.cover)},
            {"scp", node_families(scp.cover)},
        };
        for (const auto& [name, family] : others) {
            if (family != reference) {
                SweepMismatch mismatch;
                mismatch.k = k;
                mismatch.algorithm_a = "naive";
                mismatch.algorithm_b = name;
                diff_witness(reference, family, mismatch);
                report.mismatches.push_back(std::move(mismatch));
            }
        }
    }
    return report;
}

}  // namespace percolation
