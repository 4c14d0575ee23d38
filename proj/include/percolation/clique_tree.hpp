#pragma once

#include <cstdint>
#include <vector>

#include "percolation/clique_enum.hpp"
#include "percolation/engines.hpp"
#include "percolation/types.hpp"

namespace percolation {

/// Probabilistic set-membership summary: false positives possible, false
/// negatives never. Sized as m = max(64, ceil(n*ln(1/fpr)/ln^2 2)) bits with
/// round((m/n)*ln 2) probes; probe positions come from two independent
/// 64-bit hashes combined by double hashing.
class BloomFilter {
public:
    BloomFilter() = default;
    BloomFilter(std::int64_t expected_elements, double fpr_target);

    void insert(std::uint64_t key);
    bool maybe_contains(std::uint64_t key) const;

    std::int64_t bit_count() const noexcept { return bit_count_; }
    std::int32_t hash_count() const noexcept { return hash_count_; }
    std::int64_t inserted() const noexcept { return inserted_; }

private:
    std::vector<std::uint64_t> words_;
    std::int64_t bit_count_ = 0;
    std::int32_t hash_count_ = 0;
    std::int64_t inserted_ = 0;
};

/// Complete binary tree over the maximal cliques of a store. Leaves hold the
/// exact member arrays; each internal node summarises the union of the
/// graph-nodes under it, as a Bloom filter, or as an exact sorted array when
/// the union is small. The summary gives an upper bound on the intersection
/// of any clique with the leaves below, so a subtree whose bound falls short
/// of k-1 cannot contain a neighbor and is skipped. Topology and summaries
/// never change after the build; only the visited flags mutate during a run,
/// and an internal flag is true iff every leaf below it has been visited.
///
/// Leaves are assigned in lexicographic order of the member arrays so that
/// nearby leaves share nodes and subtree unions stay small. The tree is
/// array-indexed (children of i at 2i+1, 2i+2) with the bottom level
/// left-filled; leaf ordinal i lives at array slot leaf_count-1+i.
class CliqueTree {
public:
    /// Throws std::invalid_argument on an empty store.
    explicit CliqueTree(const CliqueStore& store, double fpr_target = 0.01);

    /// Recursive pruned search for the unvisited cliques intersecting
    /// `current` in at least k-1 nodes. Found cliques are marked visited
    /// with flags propagated upward, and their store indices returned.
    /// When stats is given, internal_probes and leaf_tests accumulate.
    std::vector<CliqueId> search_unvisited_neighbors(const Clique& current,
                                                     std::int32_t k,
                                                     RunStats* stats = nullptr);

    void mark_clique_visited(CliqueId clique);
    bool clique_visited(CliqueId clique) const;

    /// Clears every visited flag; summaries are untouched. Supports all-k
    /// sweeps over a single build.
    void reset_visited();

    std::int64_t leaf_count() const noexcept { return leaf_count_; }
    std::int64_t node_count() const noexcept {
        return static_cast<std::int64_t>(nodes_.size());
    }
    std::int64_t internal_count() const noexcept { return leaf_count_ - 1; }
    std::int32_t height() const noexcept;
    std::uint64_t bloom_bits_total() const noexcept { return bloom_bits_total_; }

    // Structure access, used by differential tests.
    bool is_leaf(std::int64_t tree_index) const {
        return tree_index >= leaf_count_ - 1;
    }
    bool node_visited(std::int64_t tree_index) const {
        return nodes_[tree_index].visited;
    }
    bool node_may_contain(std::int64_t tree_index, NodeId v) const;
    std::int64_t leaf_slot_of_clique(CliqueId clique) const {
        return leaf_count_ - 1 + leaf_pos_[clique];
    }
    CliqueId clique_at_leaf(std::int64_t tree_index) const {
        return leaf_order_[tree_index - (leaf_count_ - 1)];
    }

private:
    struct Node {
        std::vector<NodeId> exact;  // leaf members, or small internal union
        BloomFilter filter;         // populated when exact is not used
        std::int32_t union_size = 0;
        bool use_exact = false;
        bool visited = false;
    };

    std::vector<NodeId> build_union(std::int64_t tree_index,
                                    const CliqueStore& store, double fpr_target);
    std::int32_t overlap_upper_bound(const Node& node, const Clique& current,
                                     std::int32_t threshold) const;
    void search(std::int64_t tree_index, const Clique& current,
                std::int32_t threshold, std::vector<CliqueId>& found,
                RunStats* stats);
    void propagate_up(std::int64_t tree_index);

    std::vector<Node> nodes_;
    std::vector<CliqueId> leaf_order_;    // leaf ordinal -> clique index
    std::vector<std::int64_t> leaf_pos_;  // clique index -> leaf ordinal
    std::int64_t leaf_count_ = 0;
    std::uint64_t bloom_bits_total_ = 0;
};

/// Same frontier framework as incidence_percolate, with neighbor discovery
/// through the clique tree. The cover is identical; stats additionally carry
/// internal-node probes and exact leaf tests. All visited flags must be
/// clear on entry (fresh build or reset_visited).
PercolationResult tree_percolate(CliqueTree& tree, const CliqueStore& store,
                                 std::int32_t k);

}  // namespace percolation
