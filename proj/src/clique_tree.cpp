#include "percolation/clique_tree.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace percolation {

namespace {

constexpr std::size_t kExactUnionLimit = 16;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

BloomFilter::BloomFilter(std::int64_t expected_elements, double fpr_target) {
    if (expected_elements < 1)
        throw std::invalid_argument("expected_elements must be >= 1");
    if (!(fpr_target > 0.0 && fpr_target < 1.0))
        throw std::invalid_argument("fpr_target must be in (0,1)");
    const double ln2 = std::log(2.0);
    const double bits = std::ceil(static_cast<double>(expected_elements) *
                                  std::log(1.0 / fpr_target) / (ln2 * ln2));
    bit_count_ = std::max<std::int64_t>(64, static_cast<std::int64_t>(bits));
    hash_count_ = std::max<std::int32_t>(
        1, static_cast<std::int32_t>(std::lround(
               static_cast<double>(bit_count_) / expected_elements * ln2)));
    words_.assign(static_cast<std::size_t>((bit_count_ + 63) / 64), 0);
}

void BloomFilter::insert(std::uint64_t key) {
    const std::uint64_t h1 = mix64(key);
    const std::uint64_t h2 = mix64(key ^ 0xA24BAED4963EE407ULL) | 1;
    std::uint64_t h = h1;
    for (std::int32_t i = 0; i < hash_count_; ++i) {
        const std::uint64_t bit = h % static_cast<std::uint64_t>(bit_count_);
        words_[bit >> 6] |= 1ULL << (bit & 63);
        h += h2;
    }
    ++inserted_;
}

bool BloomFilter::maybe_contains(std::uint64_t key) const {
    const std::uint64_t h1 = mix64(key);
    const std::uint64_t h2 = mix64(key ^ 0xA24BAED4963EE407ULL) | 1;
    std::uint64_t h = h1;
    for (std::int32_t i = 0; i < hash_count_; ++i) {
        const std::uint64_t bit = h % static_cast<std::uint64_t>(bit_count_);
        if ((words_[bit >> 6] & (1ULL << (bit & 63))) == 0) return false;
        h += h2;
    }
    return true;
}

CliqueTree::CliqueTree(const CliqueStore& store, double fpr_target) {
    if (store.size() == 0)
        throw std::invalid_argument("cannot build a clique tree over an empty store");

    leaf_count_ = static_cast<std::int64_t>(store.size());
    leaf_order_.resize(store.size());
    for (std::size_t i = 0; i < store.size(); ++i)
        leaf_order_[i] = static_cast<CliqueId>(i);
    std::sort(leaf_order_.begin(), leaf_order_.end(),
              [&store](CliqueId a, CliqueId b) {
                  return store.cliques[a] < store.cliques[b];
              });
    leaf_pos_.resize(store.size());
    for (std::size_t i = 0; i < leaf_order_.size(); ++i)
        leaf_pos_[leaf_order_[i]] = static_cast<std::int64_t>(i);

    nodes_.resize(static_cast<std::size_t>(2 * leaf_count_ - 1));
    build_union(0, store, fpr_target);
}

std::vector<NodeId> CliqueTree::build_union(std::int64_t tree_index,
                                            const CliqueStore& store,
                                            double fpr_target) {
    Node& node = nodes_[tree_index];
    if (is_leaf(tree_index)) {
        node.exact = store.cliques[clique_at_leaf(tree_index)];
        node.union_size = static_cast<std::int32_t>(node.exact.size());
        node.use_exact = true;
        return node.exact;
    }

    auto left = build_union(2 * tree_index + 1, store, fpr_target);
    auto right = build_union(2 * tree_index + 2, store, fpr_target);
    std::vector<NodeId> merged;
    merged.reserve(left.size() + right.size());
    std::set_union(left.begin(), left.end(), right.begin(), right.end(),
                   std::back_inserter(merged));
    node.union_size = static_cast<std::int32_t>(merged.size());

    if (merged.size() < kExactUnionLimit) {
        node.exact = merged;
        node.use_exact = true;
    } else {
        node.filter = BloomFilter(node.union_size, fpr_target);
        for (NodeId v : merged)
            node.filter.insert(static_cast<std::uint64_t>(v));
        bloom_bits_total_ += static_cast<std::uint64_t>(node.filter.bit_count());
    }
    return merged;
}

bool CliqueTree::node_may_contain(std::int64_t tree_index, NodeId v) const {
    const Node& node = nodes_[tree_index];
    if (node.use_exact)
        return std::binary_search(node.exact.begin(), node.exact.end(), v);
    return node.filter.maybe_contains(static_cast<std::uint64_t>(v));
}

std::int32_t CliqueTree::overlap_upper_bound(const Node& node, const Clique& current,
                                             std::int32_t threshold) const {
    std::int32_t hits = 0;
    std::int32_t remaining = static_cast<std::int32_t>(current.size());
    for (NodeId v : current) {
        --remaining;
        const bool present =
            node.use_exact
                ? std::binary_search(node.exact.begin(), node.exact.end(), v)
                : node.filter.maybe_contains(static_cast<std::uint64_t>(v));
        if (present && ++hits >= threshold) return hits;
        if (hits + remaining < threshold) return hits;
    }
    return hits;
}

void CliqueTree::search(std::int64_t tree_index, const Clique& current,
                        std::int32_t threshold, std::vector<CliqueId>& found,
                        RunStats* stats) {
    Node& node = nodes_[tree_index];
    if (node.visited) return;

    if (is_leaf(tree_index)) {
        if (stats != nullptr) ++stats->leaf_tests;
        if (intersection_at_least(current, node.exact, threshold)) {
            if (node.exact == current) return;  // a clique is not its own neighbor
            found.push_back(clique_at_leaf(tree_index));
            node.visited = true;
            propagate_up(tree_index);
        }
        return;
    }

    if (stats != nullptr) ++stats->internal_probes;
    if (overlap_upper_bound(node, current, threshold) < threshold) return;

    search(2 * tree_index + 1, current, threshold, found, stats);
    search(2 * tree_index + 2, current, threshold, found, stats);
}

std::vector<CliqueId> CliqueTree::search_unvisited_neighbors(const Clique& current,
                                                             std::int32_t k,
                                                             RunStats* stats) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    std::vector<CliqueId> found;
    search(0, current, k - 1, found, stats);
    return found;
}

void CliqueTree::propagate_up(std::int64_t tree_index) {
    while (tree_index > 0) {
        const std::int64_t parent = (tree_index - 1) / 2;
        const std::int64_t sibling = (tree_index % 2 == 1) ? tree_index + 1 : tree_index - 1;
        if (!nodes_[sibling].visited) break;
        nodes_[parent].visited = true;
        tree_index = parent;
    }
}

void CliqueTree::mark_clique_visited(CliqueId clique) {
    const std::int64_t slot = leaf_slot_of_clique(clique);
    if (nodes_[slot].visited) return;
    nodes_[slot].visited = true;
    propagate_up(slot);
}

bool CliqueTree::clique_visited(CliqueId clique) const {
    return nodes_[leaf_slot_of_clique(clique)].visited;
}

void CliqueTree::reset_visited() {
    for (auto& node : nodes_) node.visited = false;
}

std::int32_t CliqueTree::height() const noexcept {
    std::int32_t h = 0;
    for (std::int64_t n = node_count(); n > 1; n >>= 1) ++h;
    return h;
}

PercolationResult tree_percolate(CliqueTree& tree, const CliqueStore& store,
                                 std::int32_t k) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    if (tree.leaf_count() != static_cast<std::int64_t>(store.size()))
        throw std::invalid_argument("tree was built over a different store");
    for (std::size_t c = 0; c < store.size(); ++c)
        if (tree.clique_visited(static_cast<CliqueId>(c)))
            throw std::logic_error("tree has visited flags set; call reset_visited first");
    const auto start = std::chrono::steady_clock::now();

    RunStats stats;
    stats.bloom_bits_total = tree.bloom_bits_total();

    // Cliques below size k never participate at this k.
    for (std::size_t c = 0; c < store.size(); ++c)
        if (store.cliques[c].size() < static_cast<std::size_t>(k))
            tree.mark_clique_visited(static_cast<CliqueId>(c));

    std::vector<std::int32_t> raw(store.size(), Cover::kUnassigned);
    std::vector<CliqueId> frontier;
    std::int32_t next_component = 0;

    for (std::size_t seed = 0; seed < store.size(); ++seed) {
        if (store.cliques[seed].size() < static_cast<std::size_t>(k)) continue;
        if (tree.clique_visited(static_cast<CliqueId>(seed))) continue;

        const std::int32_t component = next_component++;
        raw[seed] = component;
        tree.mark_clique_visited(static_cast<CliqueId>(seed));
        ++stats.assigned_cliques;
        frontier.assign(1, static_cast<CliqueId>(seed));

        while (!frontier.empty()) {
            const CliqueId current = frontier.back();
            frontier.pop_back();
            const std::uint64_t leaf_tests_before = stats.leaf_tests;
            const auto neighbors =
                tree.search_unvisited_neighbors(store.cliques[current], k, &stats);
            stats.successful_tests += neighbors.size();
            stats.failed_tests += stats.leaf_tests - leaf_tests_before - neighbors.size();
            for (CliqueId found : neighbors) {
                raw[found] = component;
                ++stats.assigned_cliques;
                frontier.push_back(found);
            }
        }
    }
    stats.candidate_pairs = stats.leaf_tests;

    PercolationResult result;
    result.cover = make_cover(store.cliques, k, raw);
    stats.components = next_component;
    stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    result.stats = stats;
    return result;
}

}  // namespace percolation
