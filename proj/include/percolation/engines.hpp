#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "percolation/clique_enum.hpp"
#include "percolation/types.hpp"

namespace percolation {

/// Result of one percolation run: a partition of the participating cliques
/// into components, plus the (possibly overlapping) node set of each
/// community. Cliques smaller than k stay unassigned (-1).
struct Cover {
    static constexpr std::int32_t kUnassigned = -1;

    std::int32_t k = 0;
    std::vector<std::int32_t> component_of;          // per clique index
    std::vector<std::vector<CliqueId>> communities;  // clique indices per component
    std::vector<std::vector<NodeId>> node_sets;      // sorted union per component
};

/// Counters for one run. successful_tests counts only the tests that joined
/// a new clique to a component, which is exactly one per spanning-forest
/// edge, so successful_tests == assigned_cliques - components on every run.
/// For the naive oracle, above-threshold pairs between cliques already in
/// the same component appear in candidate_pairs only.
struct RunStats {
    std::uint64_t successful_tests = 0;
    std::uint64_t failed_tests = 0;
    std::uint64_t candidate_pairs = 0;
    std::int64_t components = 0;
    std::int64_t assigned_cliques = 0;
    double elapsed_ms = 0.0;

    // tree engine only
    std::uint64_t internal_probes = 0;
    std::uint64_t leaf_tests = 0;
    std::uint64_t bloom_bits_total = 0;
};

struct PercolationResult {
    Cover cover;
    RunStats stats;
};

/// Default ceiling on the clique count the quadratic naive oracle accepts.
inline constexpr std::uint64_t kDefaultNaiveCap = 20'000;

/// True iff |a ∩ b| >= threshold. Exits early once the threshold is reached
/// or once the remaining elements cannot reach it. Inputs must be sorted.
bool intersection_at_least(const Clique& a, const Clique& b, std::int32_t threshold);

/// Exact |a ∩ b| by sorted merge.
std::int32_t intersection_size(const Clique& a, const Clique& b);

/// Reference oracle: builds all pairwise overlaps among cliques of size
/// >= k, thresholds at k-1 and returns the connected components. Refuses
/// with CapExceeded("naive-cap") when more than cap cliques participate.
PercolationResult naive_percolate(const CliqueStore& store, std::int32_t k,
                                  std::uint64_t cap = kDefaultNaiveCap);

/// Frontier expansion over the implicit clique graph, generating candidate
/// neighbors through per-node incidence lists and deleting cliques from the
/// lists as they are visited.
PercolationResult incidence_percolate(const CliqueStore& store, std::int32_t k);

/// Per-run mutable state for incidence_percolate: a private copy of the
/// node->cliques lists restricted to cliques of size >= k, with constant-time
/// removal. The shared CliqueStore is never mutated, so independent runs may
/// execute concurrently on the same store.
class IncidenceState {
public:
    IncidenceState(const CliqueStore& store, std::int32_t k);

    /// Deduplicated unvisited cliques sharing at least one node with the
    /// given clique. Never returns a visited clique or the clique itself.
    std::vector<CliqueId> unvisited_adjacent(CliqueId clique);

    /// Removes the clique from every incidence list it appears in.
    void mark_visited(CliqueId clique);

    bool visited(CliqueId clique) const { return visited_[clique] != 0; }

private:
    const CliqueStore* store_;
    std::vector<std::vector<CliqueId>> lists_;       // per node, unvisited only
    std::vector<std::vector<std::int32_t>> slots_;   // position of clique in each member list
    std::vector<char> visited_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t token_ = 0;
};

/// Canonical Cover from a raw component labelling: component ids are
/// renumbered in first-appearance order over ascending clique index.
Cover make_cover(std::span<const Clique> cliques, std::int32_t k,
                 std::span<const std::int32_t> raw_component_of);

/// The community node sets of a cover, sorted for family comparison.
std::vector<std::vector<NodeId>> node_families(const Cover& cover);

}  // namespace percolation
