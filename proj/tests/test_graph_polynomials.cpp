#include <catch_amalgamated.hpp>

#include <random>

#include "sigroots/enumerate.hpp"
#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"
#include "sigroots/graph_polynomials.hpp"
#include "sigroots/root_analysis.hpp"

using namespace sigroots;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_forest(int n, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution keep(0.8);
    for (int v = 1; v < n; ++v) {
        if (!keep(rng)) continue;
        g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    return g;
}

// det(kI - A) by fraction-free Gaussian elimination (Bareiss).
Integer det_shifted(const Graph& g, long k) {
    const int n = g.order();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j ? k : 0) - (g.has_edge(i, j) ? 1 : 0);
    Integer prev = 1;
    int sign = 1;
    for (int p = 0; p < n - 1; ++p) {
        if (m[p][p] == 0) {
            int swap = p + 1;
            while (swap < n && m[swap][p] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[p], m[swap]);
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i)
            for (int j = p + 1; j < n; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
        prev = m[p][p];
    }
    return sign * m[n - 1][n - 1];
}

IntPoly neg_x_power(int n) { return IntPoly::monomial(n % 2 ? -1 : 1, n); }

}  // namespace

TEST_CASE("partition counts on small graphs") {
    CHECK(sigma_partition_counts(empty_graph(3)) == PartitionPoly{{0, 1, 3, 1}});
    for (int n = 1; n <= 9; ++n) {
        PartitionPoly unit;
        unit.a.assign(n + 1, 0);
        unit.a[n] = 1;
        CHECK(sigma_partition_counts(complete_graph(n)) == unit);
        CHECK(sigma_poly(complete_graph(n)) == IntPoly::monomial(1, n));
    }
    // P_3 = a-b-c: {ac|b} and {a|b|c}.
    CHECK(sigma_partition_counts(path_graph(3)) == PartitionPoly{{0, 0, 1, 1}});
    CHECK(sigma_partition_counts_brute_force(path_graph(3)) == PartitionPoly{{0, 0, 1, 1}});
    CHECK_THROWS_AS(sigma_partition_counts(empty_graph(17)), capacity_error);
}

TEST_CASE("Zykov recursion agrees with set-partition enumeration") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false))
            REQUIRE(sigma_partition_counts(g) == sigma_partition_counts_brute_force(g));
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(7 + trial % 2, rng, 0.2 + 0.6 * (trial % 5) / 4.0);
        REQUIRE(sigma_partition_counts(g) == sigma_partition_counts_brute_force(g));
    }
}

TEST_CASE("chromatic polynomial") {
    for (int n = 1; n <= 6; ++n) CHECK(chromatic_poly(empty_graph(n)) == IntPoly::monomial(1, n));
    CHECK(eval_exact(chromatic_poly(path_graph(3)), 2) == 2);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            IntPoly pi = chromatic_poly(g);
            for (int k = 0; k <= 4; ++k) REQUIRE(eval_exact(pi, k) == count_proper_colourings(g, k));
        }
}

TEST_CASE("lowest sigma coefficient sits at the chromatic number") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            IntPoly s = sigma_poly(g);
            REQUIRE(s.low_order() == chromatic_number(g));
            REQUIRE(s.degree() == n);
            REQUIRE(s.leading() == 1);
        }
}

TEST_CASE("adjoint polynomial") {
    CHECK(adjoint_poly(complete_graph(3)) == IntPoly{0, 1, 3, 1});
    for (int n = 1; n <= 12; ++n) {
        IntPoly expected;
        for (int k = 0; k <= n; ++k) expected += IntPoly::monomial(stirling2(n, k), k);
        CHECK(edgeless_sigma(n) == expected);
        CHECK(adjoint_poly(complete_graph(n)) == expected);
    }
    CHECK(edgeless_sigma(0) == IntPoly{1});
}

TEST_CASE("H-graph adjoint closed form") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            for (int t = 0; t <= 3; ++t) {
                HGraphSpec spec{n, k, t};
                if (n + k * t > 16) continue;
                INFO("H(" << n << "," << k << "," << t << ")");
                REQUIRE(h_graph_adjoint_poly(spec) == adjoint_poly(h_graph(spec)));
            }
    // Past the partition-count scope: monic, degree n + kt, sum of coefficients is the number of
    // partitions of H into cliques, which exceeds the Bell number of the clique alone.
    IntPoly big = h_graph_adjoint_poly({21, 21, 2});
    CHECK(big.degree() == 63);
    CHECK(big.leading() == 1);
    Integer total = 0;
    for (const auto& c : big.coeffs()) total += c;
    Integer bell = 0;
    for (int k = 0; k <= 21; ++k) bell += stirling2(21, k);
    CHECK(total > bell);
}

TEST_CASE("matching polynomial") {
    for (int n = 0; n <= 6; ++n) CHECK(matching_poly(empty_graph(n)) == IntPoly::monomial(1, n));
    CHECK(matching_poly(path_graph(3)) == IntPoly{0, -2, 0, 1});
    CHECK(matching_poly(complete_graph(3)) == IntPoly{0, -3, 0, 1});
    CHECK_THROWS_AS(matching_poly(empty_graph(25)), capacity_error);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(2 + trial % 9, rng, 0.45);
        if (g.size() > 24) continue;
        auto m = matching_counts_brute_force(g);
        IntPoly expected;
        for (std::size_t i = 0; i < m.size(); ++i)
            expected += IntPoly::monomial(i % 2 ? -m[i] : m[i], g.order() - 2 * static_cast<int>(i));
        REQUIRE(matching_poly(g) == expected);
    }
}

TEST_CASE("matching polynomials are real-rooted") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            IntPoly m = matching_poly(g);
            REQUIRE(sturm_distinct_real_roots(m) == squarefree_part(m).degree());
        }
}

TEST_CASE("characteristic polynomial") {
    for (int n = 0; n <= 5; ++n) CHECK(characteristic_poly(empty_graph(n)) == IntPoly::monomial(1, n));
    CHECK(characteristic_poly(complete_graph(2)) == IntPoly{-1, 0, 1});
    CHECK(characteristic_poly(path_graph(3)) == IntPoly{0, -2, 0, 1});
    CHECK_THROWS_AS(characteristic_poly(empty_graph(33)), capacity_error);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(1 + trial % 14, rng);
        IntPoly phi = characteristic_poly(g);
        REQUIRE(phi.degree() == g.order());
        REQUIRE(phi.leading() == 1);
        for (long k = -3; k <= 3; ++k) REQUIRE(eval_exact(phi, k) == det_shifted(g, k));
    }
}

TEST_CASE("forest identity: characteristic equals matching polynomial") {
    for (int n = 1; n <= 9; ++n)
        for (const Graph& t : enumerate_trees(n)) REQUIRE(characteristic_poly(t) == matching_poly(t));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        Graph f = random_forest(1 + trial % 20, rng);
        REQUIRE(is_forest(f));
        REQUIRE(characteristic_poly(f) == matching_poly(f));
    }
    // Not a forest: C_4 has phi != m.
    CHECK_FALSE(characteristic_poly(cycle_graph(4)) == matching_poly(cycle_graph(4)));
}

TEST_CASE("triangle-free identity") {
    CHECK(sigma_of_complement_substituted(empty_graph(3)) == IntPoly::monomial(-1, 6));
    CHECK(sigma_of_complement_substituted(path_graph(3)) == IntPoly{0, 0, 0, 0, 2, 0, -1});
    CHECK(sigma_of_complement_substituted(path_graph(3)) == neg_x_power(3) * matching_poly(path_graph(3)));
    CHECK(sigma_of_complement_substituted(cycle_graph(4)) == neg_x_power(4) * matching_poly(cycle_graph(4)));
    CHECK_THROWS_AS(sigma_of_complement_substituted(complete_graph(3)), domain_error);

    std::size_t checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            if (!is_triangle_free(g)) continue;
            ++checked;
            REQUIRE(sigma_of_complement_substituted(g) == neg_x_power(n) * matching_poly(g));
        }
    CHECK(checked == 1 + 2 + 3 + 7 + 14 + 38 + 107);
}

TEST_CASE("sigma is multiplicative over joins") {
    std::vector<Graph> small;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) small.push_back(g);
    for (const Graph& g : small)
        for (const Graph& h : small) REQUIRE(sigma_poly(join(g, h)) == sigma_poly(g) * sigma_poly(h));
}
