#include "percolation/scp.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "percolation/clique_enum.hpp"

namespace percolation {

namespace {

struct CliqueKeyHash {
    std::size_t operator()(const Clique& c) const noexcept {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (NodeId v : c) {
            h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL;
            h *= 0x100000001B3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

class UnionFind {
public:
    std::int32_t add() {
        parent_.push_back(static_cast<std::int32_t>(parent_.size()));
        size_.push_back(1);
        return parent_.back();
    }

    std::int32_t find(std::int32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int64_t> size_;
};

}  // namespace

ScpResult scp_percolate(const Graph& g, std::int32_t k, std::uint64_t cap) {
    if (k < 3)
        throw std::invalid_argument("k must be >= 3");
    const auto start = std::chrono::steady_clock::now();

    ScpResult result;
    result.k_cliques = enumerate_k_cliques(g, k, cap);

    std::unordered_map<Clique, std::int32_t, CliqueKeyHash> key_ids;
    UnionFind uf;
    std::vector<std::int32_t> anchor(result.k_cliques.size());

    Clique sub(static_cast<std::size_t>(k - 1));
    for (std::size_t i = 0; i < result.k_cliques.size(); ++i) {
        const Clique& members = result.k_cliques[i];
        std::int32_t first_id = -1;
        for (std::int32_t drop = 0; drop < k; ++drop) {
            sub.clear();
            for (std::int32_t j = 0; j < k; ++j)
                if (j != drop) sub.push_back(members[j]);
            auto [it, inserted] = key_ids.try_emplace(sub, -1);
            if (inserted) it->second = uf.add();
            if (first_id < 0)
                first_id = it->second;
            else
                uf.unite(first_id, it->second);
        }
        anchor[i] = first_id;
    }
    result.distinct_subcliques = key_ids.size();

    std::vector<std::int32_t> raw(result.k_cliques.size());
    for (std::size_t i = 0; i < result.k_cliques.size(); ++i)
        raw[i] = uf.find(anchor[i]);
    result.cover = make_cover(result.k_cliques, k, raw);

    result.stats.assigned_cliques = static_cast<std::int64_t>(result.k_cliques.size());
    result.stats.components = static_cast<std::int64_t>(result.cover.communities.size());
    // Forest edges of the k-clique graph; union operations over subclique
    // keys do not map one-to-one onto clique-graph edges.
    result.stats.successful_tests =
        static_cast<std::uint64_t>(result.stats.assigned_cliques - result.stats.components);
    result.stats.candidate_pairs =
        static_cast<std::uint64_t>(result.k_cliques.size()) * static_cast<std::uint64_t>(k);
    result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    return result;
}

}  // namespace percolation
