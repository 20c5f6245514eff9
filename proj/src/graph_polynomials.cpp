#include "sigroots/graph_polynomials.hpp"

#include <array>
#include <functional>
#include <unordered_map>

#include "sigroots/errors.hpp"

namespace sigroots {

namespace {

// Bell(16) ~ 1.05e10, so 64-bit counters suffice inside the sigma scope.
using Counts = std::array<std::uint64_t, max_sigma_order + 1>;

void check_sigma_scope(const Graph& g, const char* what) {
    if (g.order() > max_sigma_order)
        throw capacity_error(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds " +
                             std::to_string(max_sigma_order));
}

PartitionPoly to_partition_poly(const Counts& c, int n) {
    PartitionPoly out;
    out.a.reserve(n + 1);
    for (int i = 0; i <= n; ++i) out.a.emplace_back(static_cast<unsigned long>(c[i]));
    return out;
}

/// Merge v into u (u keeps its label, v is removed and later vertices shift down).
Graph contract(const Graph& g, int u, int v) {
    Graph merged = g;
    VertexSet nb = g.neighbors(v) & ~bit(u);
    for (VertexSet rest = nb; rest; rest &= rest - 1) merged.add_edge(u, std::countr_zero(rest));
    return delete_vertex(merged, v);
}

class Zykov {
public:
    Counts run(const Graph& g) {
        const int n = g.order();
        Counts out{};
        if (n == 0) {
            out[0] = 1;
            return out;
        }
        if (auto it = memo_.find(g); it != memo_.end()) return it->second;

        // A vertex adjacent to everything is a singleton block in every partition.
        int universal = -1;
        int hub = -1;
        int hub_degree = -1;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            if (d == n - 1) {
                universal = v;
                break;
            }
            if (d > hub_degree) {
                hub = v;
                hub_degree = d;
            }
        }
        if (universal >= 0) {
            Counts rest = run(delete_vertex(g, universal));
            for (int i = n; i >= 1; --i) out[i] = rest[i - 1];
        } else {
            int other = std::countr_zero(g.vertices() & ~g.neighbors(hub) & ~bit(hub));
            Graph added = g;
            added.add_edge(hub, other);
            Counts with_edge = run(added);
            Counts merged = run(contract(g, hub, other));
            for (int i = 0; i <= n; ++i) out[i] = with_edge[i] + merged[i];
        }
        memo_.emplace(g, out);
        return out;
    }

private:
    std::unordered_map<Graph, Counts, GraphHash> memo_;
};

}  // namespace

PartitionPoly sigma_partition_counts(const Graph& g) {
    check_sigma_scope(g, "sigma_partition_counts");
    Zykov z;
    return to_partition_poly(z.run(g), g.order());
}

PartitionPoly sigma_partition_counts_brute_force(const Graph& g) {
    check_sigma_scope(g, "sigma_partition_counts_brute_force");
    const int n = g.order();
    Counts counts{};
    if (n == 0) {
        counts[0] = 1;
        return to_partition_poly(counts, 0);
    }
    // Restricted growth string: block[v] <= 1 + max(block[0..v-1]).
    std::vector<VertexSet> blocks;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            ++counts[blocks.size()];
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (g.neighbors(v) & blocks[b]) continue;
            blocks[b] |= bit(v);
            place(v + 1);
            blocks[b] &= ~bit(v);
        }
        blocks.push_back(bit(v));
        place(v + 1);
        blocks.pop_back();
    };
    place(0);
    return to_partition_poly(counts, n);
}

IntPoly sigma_poly(const Graph& g) { return partition_to_sigma(sigma_partition_counts(g)); }

IntPoly chromatic_poly(const Graph& g) { return partition_to_chromatic(sigma_partition_counts(g)); }

IntPoly adjoint_poly(const Graph& g) { return sigma_poly(complement(g)); }

IntPoly matching_poly(const Graph& g) {
    const int n = g.order();
    if (n > max_matching_order)
        throw capacity_error("matching_poly: order " + std::to_string(n) + " exceeds " +
                             std::to_string(max_matching_order));
    // counts(S) = matching counts of the subgraph induced on S, split on the lowest vertex of S.
    std::unordered_map<VertexSet, std::vector<std::uint64_t>> memo;
    std::function<const std::vector<std::uint64_t>&(VertexSet)> counts =
        [&](VertexSet s) -> const std::vector<std::uint64_t>& {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        std::vector<std::uint64_t> out{1};
        if (s) {
            int v = std::countr_zero(s);
            VertexSet rest = s & ~bit(v);
            out = counts(rest);
            for (VertexSet nb = g.neighbors(v) & rest; nb; nb &= nb - 1) {
                const auto& sub = counts(rest & ~bit(std::countr_zero(nb)));
                if (out.size() < sub.size() + 1) out.resize(sub.size() + 1, 0);
                for (std::size_t i = 0; i < sub.size(); ++i) out[i + 1] += sub[i];
            }
        }
        return memo.emplace(s, std::move(out)).first->second;
    };
    const auto& m = counts(g.vertices());
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer v = static_cast<unsigned long>(m[i]);
        c[n - 2 * i] = i % 2 == 0 ? v : Integer(-v);
    }
    return IntPoly(std::move(c));
}

std::vector<Integer> matching_counts_brute_force(const Graph& g) {
    auto edges = g.edges();
    if (edges.size() > 24) throw capacity_error("matching_counts_brute_force: more than 24 edges");
    std::vector<Integer> m(g.order() / 2 + 1);
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << edges.size()); ++subset) {
        VertexSet covered = 0;
        bool ok = true;
        int size = 0;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            if (!((subset >> e) & 1U)) continue;
            VertexSet ends = bit(edges[e].first) | bit(edges[e].second);
            ok = !(covered & ends);
            covered |= ends;
            ++size;
        }
        if (ok) ++m[size];
    }
    while (m.size() > 1 && m.back() == 0) m.pop_back();
    return m;
}

IntPoly characteristic_poly(const Graph& g) {
    const int n = g.order();
    if (n > max_characteristic_order)
        throw capacity_error("characteristic_poly: order " + std::to_string(n) + " exceeds " +
                             std::to_string(max_characteristic_order));
    if (n == 0) return IntPoly{1};
    auto a = [&](int i, int j) { return g.has_edge(i, j) ? 1 : 0; };
    // Descending coefficients of the trailing principal block, starting with the 1x1 block [0].
    std::vector<Integer> cp{1, 0};
    for (int k = n - 2; k >= 0; --k) {
        const int m = n - 1 - k;  // size of the block below/right of row k
        std::vector<Integer> t(m + 2);
        t[0] = 1;
        t[1] = -a(k, k);
        // t[j+2] = -R * B^j * C with R = row k, C = column k, B = trailing block.
        std::vector<Integer> v(m);
        for (int i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        for (int j = 0; j < m; ++j) {
            Integer dot = 0;
            for (int i = 0; i < m; ++i)
                if (a(k, k + 1 + i)) dot += v[i];
            t[j + 2] = -dot;
            if (j + 1 == m) break;
            std::vector<Integer> next(m);
            for (int r = 0; r < m; ++r)
                for (VertexSet nb = g.neighbors(k + 1 + r) & ~low_bits(k + 1); nb; nb &= nb - 1)
                    next[r] += v[std::countr_zero(nb) - (k + 1)];
            v = std::move(next);
        }
        std::vector<Integer> next_cp(m + 2);
        for (int i = 0; i <= m + 1; ++i)
            for (int j = 0; j <= std::min(i, m); ++j) next_cp[i] += t[i - j] * cp[j];
        cp = std::move(next_cp);
    }
    std::reverse(cp.begin(), cp.end());
    return IntPoly(std::move(cp));
}

IntPoly sigma_of_complement_substituted(const Graph& g) {
    if (!is_triangle_free(g))
        throw domain_error("sigma_of_complement_substituted: the identity needs a triangle-free graph");
    check_sigma_scope(g, "sigma_of_complement_substituted");
    return shift_compose(adjoint_poly(g), IntPoly{0, 0, -1});
}

Integer count_proper_colourings(const Graph& g, int k) {
    if (k < 0) throw domain_error("count_proper_colourings: negative colour count");
    const int n = g.order();
    std::vector<int> colour(n, -1);
    std::function<Integer(int)> extend = [&](int v) -> Integer {
        if (v == n) return 1;
        Integer total = 0;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (VertexSet nb = g.neighbors(v) & low_bits(v); nb && ok; nb &= nb - 1)
                ok = colour[std::countr_zero(nb)] != c;
            if (!ok) continue;
            colour[v] = c;
            total += extend(v + 1);
        }
        colour[v] = -1;
        return total;
    };
    return extend(0);
}

}  // namespace sigroots

namespace sigroots {

IntPoly edgeless_sigma(int n) {
    if (n < 0) throw domain_error("edgeless_sigma: negative order");
    std::vector<Integer> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = stirling2(n, i);
    return IntPoly(std::move(c));
}

IntPoly h_graph_adjoint_poly(const HGraphSpec& spec) {
    h_graph(spec);  // validates and enforces capacity
    const int n = spec.clique, k = spec.paths, t = spec.path_length;
    if (k == 0 || t == 0) return edgeless_sigma(n);
    // Clique partitions of a path on m vertices: last vertex alone or paired.
    std::vector<IntPoly> path{IntPoly{1}, IntPoly{0, 1}};
    for (int m = 2; m <= t; ++m) path.push_back(IntPoly{0, 1} * (path[m - 1] + path[m - 2]));
    IntPoly out;
    Integer choose = 1;  // C(k, s)
    for (int s = 0; s <= k; ++s) {
        IntPoly term = edgeless_sigma(n - s) * choose;
        for (int j = 0; j < s; ++j) term *= IntPoly{0, 1} * path[t - 1];
        for (int j = s; j < k; ++j) term *= path[t];
        out += term;
        choose = choose * (k - s) / (s + 1);
    }
    return out;
}

}  // namespace sigroots
