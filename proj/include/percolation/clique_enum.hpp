#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "percolation/graph.hpp"
#include "percolation/types.hpp"

namespace percolation {

/// Default ceiling on the number of cliques an enumeration may produce
/// before aborting with CapExceeded. Combinatorial blowup is expected on
/// adversarial inputs.
inline constexpr std::uint64_t kDefaultCliqueCap = 100'000'000;

/// Indexed collection of maximal cliques plus, for each node, the list of
/// cliques containing it. Immutable once built; safe to share across runs.
struct CliqueStore {
    std::vector<Clique> cliques;                          // enumeration order
    std::vector<std::vector<CliqueId>> node_incidence;    // per node, ascending
    std::int32_t min_size = 0;

    std::size_t size() const noexcept { return cliques.size(); }
    std::int32_t max_clique_size() const;
};

/// Enumerates every maximal clique of size >= min_size exactly once.
/// Bron-Kerbosch with pivoting, vertices pre-ordered by degeneracy at the
/// outer level. Output order is deterministic for a fixed graph.
CliqueStore enumerate_maximal_cliques(const Graph& g, std::int32_t min_size,
                                      std::uint64_t cap = kDefaultCliqueCap);

/// Enumerates every complete subgraph of exactly k nodes once, as sorted
/// member arrays, by ascending-id extension over ordered adjacency.
std::vector<Clique> enumerate_k_cliques(const Graph& g, std::int32_t k,
                                        std::uint64_t cap = kDefaultCliqueCap);

std::map<std::int32_t, std::uint64_t> clique_size_distribution(const CliqueStore& store);
std::map<std::int32_t, std::uint64_t> clique_size_distribution(std::span<const Clique> cliques);

/// One clique per line, space-separated external labels sorted, in
/// enumeration order.
void write_clique_dump(const CliqueStore& store, const Graph& g, std::ostream& out);

}  // namespace percolation
