#include "sigroots/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "sigroots/errors.hpp"
#include "sigroots/graph6.hpp"

namespace sigroots {

namespace {

/// Stable colour refinement starting from a uniform colouring. Colours are
/// ranks of (previous colour, sorted neighbour colours) signatures, so they
/// are labeling-invariant.
std::vector<int> refine_colours(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(n, 0);
    int classes = n > 0 ? 1 : 0;
    for (;;) {
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].push_back(colour[v]);
            std::vector<int> around;
            VertexSet nb = g.neighbors(v);
            while (nb) {
                around.push_back(colour[std::countr_zero(nb)]);
                nb &= nb - 1;
            }
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : signature) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, value] : rank) value = r++;
        for (int v = 0; v < n; ++v) colour[v] = rank[signature[v]];
        if (r == classes) return colour;
        classes = r;
    }
}

class LabelSearch {
public:
    explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {
        colour_ = refine_colours(g);
        slot_colour_ = colour_;
        std::sort(slot_colour_.begin(), slot_colour_.end());
        best_.assign(n_, -1);
        placed_.assign(n_, -1);
        best_slot_.assign(n_, -1);
    }

    std::vector<int> run() {
        search(0, 0);
        // best_slot_[p] is the vertex at position p; invert to vertex -> label.
        std::vector<int> label(n_);
        for (int p = 0; p < n_; ++p) label[best_slot_[p]] = p;
        return label;
    }

private:
    void search(int p, VertexSet used) {
        if (p == n_) {
            best_slot_ = placed_;
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if ((used & bit(v)) || colour_[v] != slot_colour_[p]) continue;
            long long column = 0;
            for (int q = 0; q < p; ++q) column = (column << 1) | (g_.has_edge(placed_[q], v) ? 1 : 0);
            if (column < best_[p]) continue;
            if (column > best_[p]) {
                best_[p] = column;
                std::fill(best_.begin() + p + 1, best_.end(), -1);
            }
            placed_[p] = v;
            search(p + 1, used | bit(v));
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> colour_;
    std::vector<int> slot_colour_;
    std::vector<long long> best_;
    std::vector<int> placed_;
    std::vector<int> best_slot_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    return LabelSearch(g).run();
}

Graph canonical_form(const Graph& g) {
    auto label = canonical_labeling(g);
    return relabel(g, label);
}

Graph canonical_form_exhaustive(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw capacity_error("canonical_form_exhaustive: limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Graph best = g;
    std::string best_code = emit_graph6(g);
    do {
        Graph h = relabel(g, perm);
        std::string code = emit_graph6(h);
        if (code < best_code) {
            best_code = std::move(code);
            best = h;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& classes, bool connected_extension) {
    std::unordered_set<Graph, GraphHash> seen;
    for (const Graph& base : classes) {
        const int m = base.order();
        if (m + 1 > max_vertices) throw capacity_error("extend_by_vertex: order exceeds capacity");
        Graph grown(m + 1);
        for (auto [u, v] : base.edges()) grown.add_edge(u, v);
        for (VertexSet nb = connected_extension ? 1 : 0; nb <= low_bits(m); ++nb) {
            Graph h = grown;
            for (VertexSet rest = nb; rest; rest &= rest - 1) h.add_edge(std::countr_zero(rest), m);
            seen.insert(canonical_form(h));
        }
    }
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(seen.size());
    for (const Graph& h : seen) keyed.emplace_back(emit_graph6(h), h);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [code, h] : keyed) out.push_back(std::move(h));
    return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 0) throw domain_error("enumerate_graphs: negative order");
    if (n > max_builtin_order)
        throw capacity_error("enumerate_graphs: built-in enumeration stops at order " +
                             std::to_string(max_builtin_order) + "; ingest a graph6 corpus for larger orders");
    std::vector<Graph> classes{Graph(0)};
    for (int m = 0; m < n; ++m) classes = extend_by_vertex(classes, false);
    if (connected_only) std::erase_if(classes, [](const Graph& g) { return !is_connected(g); });
    return classes;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw domain_error("enumerate_trees: need n >= 1");
    if (n > 16) throw capacity_error("enumerate_trees: limited to 16 vertices");
    std::vector<Graph> trees{Graph(1)};
    for (int m = 1; m < n; ++m) {
        std::unordered_set<Graph, GraphHash> seen;
        for (const Graph& t : trees) {
            Graph grown(m + 1);
            for (auto [u, v] : t.edges()) grown.add_edge(u, v);
            for (int attach = 0; attach < m; ++attach) {
                Graph h = grown;
                h.add_edge(attach, m);
                seen.insert(canonical_form(h));
            }
        }
        std::vector<std::pair<std::string, Graph>> keyed;
        for (const Graph& h : seen) keyed.emplace_back(emit_graph6(h), h);
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        trees.clear();
        for (auto& [code, h] : keyed) trees.push_back(std::move(h));
    }
    return trees;
}

}  // namespace sigroots
