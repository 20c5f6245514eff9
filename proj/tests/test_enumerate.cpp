#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sigroots/enumerate.hpp"
#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"

using namespace sigroots;

namespace {

// Isomorphism classes by brute force: each labeled graph is an edge mask over
// the pairs (u < v); its class key is the least mask over all relabelings.
std::pair<std::size_t, std::size_t> brute_force_class_counts(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::vector<int> index(n * n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
        index[pairs[i].second * n + pairs[i].first] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> all, connected;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint32_t key = mask;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) image |= 1u << index[p[pairs[i].first] * n + p[pairs[i].second]];
            key = std::min(key, image);
        }
        if (!all.insert(key).second) continue;
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        if (is_connected(g)) connected.insert(key);
    }
    return {all.size(), connected.size()};
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.4);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("class counts agree with brute force") {
    for (int n = 0; n <= 6; ++n) {
        auto [all, connected] = brute_force_class_counts(n);
        CHECK(enumerate_graphs(n, false).size() == all);
        CHECK(enumerate_graphs(n, true).size() == connected);
    }
    CHECK(enumerate_graphs(3, false).size() == 4);
    CHECK(enumerate_graphs(4, true).size() == 6);
}

TEST_CASE("order 7") {
    CHECK(enumerate_graphs(7, false).size() == 1044);
    CHECK(enumerate_graphs(7, true).size() == 853);
    CHECK_THROWS_AS(enumerate_graphs(8, false), capacity_error);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> keys;
        for (const Graph& g : enumerate_graphs(n, false)) keys.insert(emit_graph6(canonical_form_exhaustive(g)));
        CHECK(keys.size() == enumerate_graphs(n, false).size());
    }
}

TEST_CASE("canonical form is a labeling invariant") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 24;
        Graph g = random_graph(n, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        REQUIRE(canonical_form(h) == canonical_form(g));
        auto label = canonical_labeling(g);
        REQUIRE(relabel(g, label) == canonical_form(g));
    }
    // Regular graphs defeat colour refinement alone.
    Graph c6 = cycle_graph(6);
    Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK_FALSE(canonical_form(c6) == canonical_form(two_triangles));
}

TEST_CASE("trees") {
    const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        for (const Graph& t : trees) {
            CHECK(is_forest(t));
            CHECK(is_connected(t));
        }
    }
}

TEST_CASE("one-vertex extension reaches order 8") {
    auto connected8 = extend_by_vertex(enumerate_graphs(7, true), true);
    CHECK(connected8.size() == 11117);
    CHECK(std::is_sorted(connected8.begin(), connected8.end(),
                         [](const Graph& a, const Graph& b) { return emit_graph6(a) < emit_graph6(b); }));
}
