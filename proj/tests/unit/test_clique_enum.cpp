#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "percolation/clique_enum.hpp"
#include "percolation/harness.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace percolation;

namespace {

std::set<Clique> as_set(std::vector<Clique> cliques) {
    return {cliques.begin(), cliques.end()};
}

}  // namespace

TEST_CASE("maximal cliques: triangle") {
    auto store = enumerate_maximal_cliques(fixtures::triangle(), 3);
    REQUIRE(store.size() == 1);
    CHECK(store.cliques[0] == Clique{0, 1, 2});
}

TEST_CASE("maximal cliques: K6 minus (0,1),(2,3)") {
    auto store = enumerate_maximal_cliques(fixtures::k6_minus_two_edges(), 3);
    const std::set<Clique> expected{
        {0, 2, 4, 5}, {0, 3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}};
    CHECK(as_set(store.cliques) == expected);
    CHECK(as_set(oracle::maximal_cliques(fixtures::k6_minus_two_edges(), 3)) == expected);
    CHECK(store.max_clique_size() == 4);
}

TEST_CASE("maximal cliques: min_size filters during enumeration") {
    auto store = enumerate_maximal_cliques(fixtures::bowtie(), 3);
    CHECK(store.size() == 2);
    auto store4 = enumerate_maximal_cliques(fixtures::bowtie(), 4);
    CHECK(store4.size() == 0);
    auto store1 = enumerate_maximal_cliques(fixtures::star(3), 1);
    CHECK(store1.size() == 3);  // three edges, no isolated nodes
}

TEST_CASE("maximal cliques: matches subset-lattice oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const std::int32_t n = 8 + static_cast<std::int32_t>(seed);
        const double p = 0.2 + 0.05 * static_cast<double>(seed % 5);
        Graph g = erdos_renyi(n, p, seed);
        for (std::int32_t min_size : {1, 3}) {
            CAPTURE(seed);
            CAPTURE(min_size);
            CHECK(as_set(enumerate_maximal_cliques(g, min_size).cliques) ==
                  as_set(oracle::maximal_cliques(g, min_size)));
        }
    }
}

TEST_CASE("maximal cliques: maximality holds exhaustively") {
    Graph g = erdos_renyi(36, 0.3, 99);
    auto store = enumerate_maximal_cliques(g, 3);
    for (const auto& clique : store.cliques) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (std::binary_search(clique.begin(), clique.end(), v)) continue;
            bool adjacent_to_all = true;
            for (NodeId u : clique)
                if (!g.has_edge(u, v)) { adjacent_to_all = false; break; }
            CHECK_FALSE(adjacent_to_all);
        }
    }
}

TEST_CASE("maximal cliques: deterministic output order") {
    Graph g = erdos_renyi(20, 0.4, 5);
    auto a = enumerate_maximal_cliques(g, 3);
    auto b = enumerate_maximal_cliques(g, 3);
    CHECK(a.cliques == b.cliques);
}

TEST_CASE("node incidence is consistent") {
    Graph g = erdos_renyi(20, 0.4, 11);
    auto store = enumerate_maximal_cliques(g, 3);
    std::size_t incidence_total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (CliqueId c : store.node_incidence[v])
            CHECK(std::binary_search(store.cliques[c].begin(), store.cliques[c].end(), v));
        incidence_total += store.node_incidence[v].size();
    }
    std::size_t member_total = 0;
    for (const auto& clique : store.cliques) member_total += clique.size();
    CHECK(incidence_total == member_total);
}

TEST_CASE("clique cap aborts enumeration") {
    Graph g = fixtures::complete(12);
    CHECK_THROWS_AS(enumerate_k_cliques(g, 6, 100), CapExceeded);
    try {
        enumerate_k_cliques(g, 6, 100);
    } catch (const CapExceeded& e) {
        CHECK(e.cap_name() == "clique-cap");
    }
}

TEST_CASE("k-cliques: K4 has four triangles") {
    auto cliques = enumerate_k_cliques(fixtures::complete(4), 3);
    CHECK(cliques.size() == 4);
}

TEST_CASE("k-cliques: K6 fixture at k=4 equals its maximal cliques") {
    Graph g = fixtures::k6_minus_two_edges();
    auto cliques = enumerate_k_cliques(g, 4);
    CHECK(as_set(cliques) == as_set(oracle::k_cliques(g, 4)));
    CHECK(as_set(cliques) == as_set(enumerate_maximal_cliques(g, 4).cliques));
}

TEST_CASE("k-cliques: k above the largest clique is empty") {
    CHECK(enumerate_k_cliques(fixtures::triangle(), 4).empty());
}

TEST_CASE("k-cliques: binomial count inside one maximal clique") {
    // C(n, k) k-cliques in K_n
    const auto choose = [](std::int64_t n, std::int64_t k) {
        std::int64_t r = 1;
        for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (std::int32_t n : {5, 7}) {
        Graph g = fixtures::complete(n);
        for (std::int32_t k = 2; k <= n; ++k)
            CHECK(static_cast<std::int64_t>(enumerate_k_cliques(g, k).size()) == choose(n, k));
    }
}

TEST_CASE("k-cliques: matches oracle on random graphs") {
    for (std::uint64_t seed = 20; seed <= 26; ++seed) {
        Graph g = erdos_renyi(14, 0.45, seed);
        for (std::int32_t k = 3; k <= 5; ++k)
            CHECK(as_set(enumerate_k_cliques(g, k)) == as_set(oracle::k_cliques(g, k)));
    }
}

TEST_CASE("clique size distribution") {
    auto store = enumerate_maximal_cliques(fixtures::k6_minus_two_edges(), 4);
    auto hist = clique_size_distribution(store);
    CHECK(hist == std::map<std::int32_t, std::uint64_t>{{4, 4}});

    CliqueStore empty;
    CHECK(clique_size_distribution(empty).empty());

    auto tri = enumerate_maximal_cliques(fixtures::triangle(), 3);
    CHECK(clique_size_distribution(tri) == std::map<std::int32_t, std::uint64_t>{{3, 1}});

    std::uint64_t total = 0;
    Graph g = erdos_renyi(20, 0.5, 3);
    auto random_store = enumerate_maximal_cliques(g, 1);
    for (const auto& [size, count] : clique_size_distribution(random_store)) total += count;
    CHECK(total == random_store.size());
}

TEST_CASE("clique dump: sorted labels, enumeration order") {
    std::istringstream in("b a\nb c\na c\n");  // triangle with labels a b c
    Graph g = parse_edge_list(in);
    auto store = enumerate_maximal_cliques(g, 3);
    std::ostringstream out;
    write_clique_dump(store, g, out);
    CHECK(out.str() == "a b c\n");
}
