#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "percolation/engines.hpp"
#include "percolation/graph.hpp"
#include "percolation/types.hpp"

namespace percolation {

/// Counter-based uniform draw in [0,1): the SplitMix64 finalizer applied to
/// (seed, counter), so streams are reproducible across platforms and
/// implementations. All generators below draw through this.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Planted-partition benchmark parameters: equal-size communities, within-
/// block edge probability p_in, cross-block p_out.
struct GNParams {
    std::int32_t num_communities = 0;
    std::int32_t community_size = 32;
    double p_in = 0.0;
    double p_out = 0.0;
    std::uint64_t seed = 0;
};

Graph generate_gn(const GNParams& params);

Graph erdos_renyi(std::int32_t n, double p, std::uint64_t seed);

/// Random intersection graph: each group is a planted clique of size drawn
/// uniformly in [min_group_size, max_group_size] over random members; the
/// graph is the union of the group cliques, so communities overlap wherever
/// groups share nodes.
struct RIGParams {
    std::int32_t num_nodes = 0;
    std::int32_t num_groups = 0;
    std::int32_t min_group_size = 4;
    std::int32_t max_group_size = 15;
    std::uint64_t seed = 0;
};

Graph generate_random_intersection(const RIGParams& params);

/// Limits for the clique-graph edge count below. At least one bound must be
/// finite.
struct EdgeBudget {
    std::uint64_t max_pairs = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct EdgeCount {
    std::uint64_t count = 0;
    bool exact = false;
};

/// Counts unordered pairs of size->=k cliques overlapping in at least k-1
/// nodes, generating candidates through node incidence with pair
/// deduplication. If the budget runs out the count so far is returned with
/// exact=false; it is still a valid lower bound, and never decreases as the
/// budget grows.
EdgeCount count_clique_graph_edges(const CliqueStore& store, std::int32_t k,
                                   const EdgeBudget& budget);

/// |largest community node set| / |union of all community node sets|.
/// Throws std::domain_error on a cover with no communities.
double largest_community_proportion(const Cover& cover);

/// A network where a triangle lies inside the node union of a percolated
/// k=4 community without being contained in any of its constituent cliques:
/// a chain of seven 4-cliques whose union holds the triangle {0,1,2}, plus
/// an apex node 9 completing the separate 4-clique {0,1,2,9}. Any engine
/// shortcut that tests candidates against community node unions merges the
/// two communities; correct engines keep them apart.
Graph non_composability_fixture();

struct SweepMismatch {
    std::int32_t k = 0;
    std::string algorithm_a;
    std::string algorithm_b;
    // Minimized witness: the communities present in one family but not the
    // other, as node-id sets.
    std::vector<std::vector<NodeId>> only_in_a;
    std::vector<std::vector<NodeId>> only_in_b;
};

struct SweepRow {
    std::int32_t k = 0;
    std::string algorithm;
    RunStats stats;
};

struct SweepReport {
    std::int32_t k_min = 0;
    std::int32_t k_max = 0;
    std::vector<SweepRow> rows;
    std::vector<SweepMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// Runs naive, incidence, tree and scp engines for every k in the range
/// (k_max < k_min means "up to the largest maximal clique") and checks that
/// all four node-community families agree. Intended for graphs small enough
/// for the naive and k-clique caps.
SweepReport equivalence_sweep(const Graph& g, std::int32_t k_min = 3,
                              std::int32_t k_max = -1);

}  // namespace percolation
