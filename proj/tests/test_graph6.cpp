#include <catch_amalgamated.hpp>

#include <random>

#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"

using namespace sigroots;

namespace {

// Reference encoder written straight from the format description.
std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
    }
    std::vector<int> bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out += static_cast<char>(63 + value);
    }
    return out;
}

std::size_t error_offset(std::string_view text) {
    try {
        parse_graph6(text);
    } catch (const parse_error& e) {
        return e.offset();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("hand-decoded records") {
    // 'D' = 63 + 5; '?' is six zero bits; '{' = 63 + 0b111100 sets x04, x14, x24, x34.
    Graph g = parse_graph6("D?{");
    Graph star(5);
    for (int u = 0; u < 4; ++u) star.add_edge(u, 4);
    CHECK(g == star);

    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(0)) == "?");
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(emit_graph6(k2) == "A_");
    CHECK(parse_graph6("A_\n") == k2);
    CHECK(parse_graph6("A_\r\n") == k2);
    CHECK(parse_graph6(">>graph6<<A_") == k2);
}

TEST_CASE("malformed records carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK(error_offset("D?") == 2);        // truncated bit field
    CHECK(error_offset("D?{x") == 3);      // trailing garbage
    CHECK(error_offset("D? {") == 2);      // byte below 63
    CHECK(error_offset("A`") == 1);        // nonzero padding bit
    CHECK(error_offset("A_\nB") == 2);     // more after the newline
    CHECK_THROWS_AS(parse_graph6("~?AA"), capacity_error);  // 65 vertices
}

TEST_CASE("round trip matches the reference encoder") {
    std::mt19937_64 rng(2024);
    for (int n = 0; n <= 10; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            Graph g(n);
            std::bernoulli_distribution coin(trial % 2 ? 0.5 : 0.2);
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if (coin(rng)) g.add_edge(u, v);
            std::string text = emit_graph6(g);
            REQUIRE(text == reference_graph6(g));
            REQUIRE(parse_graph6(text) == g);
        }
    }
    for (int n : {61, 62, 63, 64}) {
        Graph g(n);
        std::bernoulli_distribution coin(0.3);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) g.add_edge(u, v);
        CHECK(emit_graph6(g) == reference_graph6(g));
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}
