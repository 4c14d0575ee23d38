#pragma once

// Independent brute-force oracles over the subset lattice. These deliberately
// use only Graph adjacency queries, never the enumeration or percolation
// code paths they are checking.

#include <cstdint>
#include <vector>

#include "percolation/graph.hpp"
#include "percolation/types.hpp"

namespace percolation::oracle {

/// Every clique of exactly k nodes, by exhaustive combination scan.
std::vector<Clique> k_cliques(const Graph& g, std::int32_t k);

/// Every maximal clique of size >= min_size, by bitmask scan over all 2^n
/// node subsets. Requires n <= 24.
std::vector<Clique> maximal_cliques(const Graph& g, std::int32_t min_size);

/// Node-community families from the definition: the k-clique graph with
/// edges between k-cliques sharing k-1 nodes, its connected components, and
/// the node union per component. Sorted for family comparison.
std::vector<std::vector<NodeId>> percolation_families(const Graph& g, std::int32_t k);

}  // namespace percolation::oracle
