#include "sigroots/graph6.hpp"

#include "sigroots/errors.hpp"

namespace sigroots {

namespace {

constexpr int bias = 63;

int sextet(std::string_view line, std::size_t pos) {
    if (pos >= line.size()) throw parse_error("graph6: truncated record", pos);
    auto c = static_cast<unsigned char>(line[pos]);
    if (c < bias || c > bias + 63) throw parse_error("graph6: byte outside the printable 63..126 range", pos);
    return c - bias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.ends_with('\n')) line.remove_suffix(1);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty record", 0);

    std::size_t pos = 0;
    long n = 0;
    if (line[0] == '~') {
        if (line.size() > 1 && line[1] == '~') throw capacity_error("graph6: 8-byte order prefix exceeds vertex capacity");
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sextet(line, pos);
        if (n < 63) throw parse_error("graph6: long order prefix used for n < 63", 0);
    } else {
        n = sextet(line, 0);
        pos = 1;
    }
    if (n > max_vertices)
        throw capacity_error("graph6: order " + std::to_string(n) + " exceeds capacity " + std::to_string(max_vertices));

    Graph g(static_cast<int>(n));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    std::size_t k = 0;
    for (std::size_t b = 0; b < bytes; ++b, ++pos) {
        int s = sextet(line, pos);
        for (int shift = 5; shift >= 0; --shift, ++k) {
            bool set = (s >> shift) & 1;
            if (k >= bits) {
                if (set) throw parse_error("graph6: nonzero padding bit", pos);
                continue;
            }
            if (!set) continue;
            // k-th bit in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
            int v = 1;
            std::size_t first = 0;
            while (first + v <= k) first += v++;
            g.add_edge(static_cast<int>(k - first), v);
        }
    }
    if (pos != line.size()) throw parse_error("graph6: trailing bytes after bit field", pos);
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(bias + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(bias + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(bias + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(bias + (acc << (6 - filled))));
    return out;
}

}  // namespace sigroots
