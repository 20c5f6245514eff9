#include "sigroots/graph.hpp"

#include <functional>
#include <numeric>

#include "sigroots/errors.hpp"

namespace sigroots {

namespace {

void check_order(long long n, const char* what) {
    if (n < 0) throw domain_error(std::string(what) + ": negative vertex count");
    if (n > max_vertices)
        throw capacity_error(std::string(what) + ": " + std::to_string(n) +
                             " vertices exceeds capacity of " + std::to_string(max_vertices));
}

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.order())
        throw domain_error(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n, "Graph"); }

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u, "add_edge");
    check_vertex(*this, v, "add_edge");
    if (u == v) throw domain_error("add_edge: loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u, "remove_edge");
    check_vertex(*this, v, "remove_edge");
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet later = adj_[u] & ~low_bits(u + 1);
        while (later) {
            int v = std::countr_zero(later);
            later &= later - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
    std::size_t h = std::hash<int>{}(g.order());
    for (VertexSet row : g.rows()) h ^= std::hash<VertexSet>{}(row) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    check_order(static_cast<long long>(g.order()) + h.order(), "disjoint_union");
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    check_order(static_cast<long long>(g.order()) + h.order(), "join");
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    check_vertex(g, u, "delete_edge");
    check_vertex(g, v, "delete_edge");
    if (!g.has_edge(u, v))
        throw domain_error("delete_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    keep &= g.vertices();
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (keep & bit(v)) index[v] = next++;
    Graph out(next);
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(g, v, "delete_vertex");
    return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(g.order())) throw domain_error("relabel: permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v)) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen = bit(0);
    VertexSet frontier = bit(0);
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertices();
}

bool is_forest(const Graph& g) {
    // Acyclic iff e = n - (number of components).
    VertexSet unseen = g.vertices();
    std::size_t components = 0;
    while (unseen) {
        ++components;
        VertexSet frontier = unseen & (~unseen + 1);
        unseen &= ~frontier;
        while (frontier) {
            VertexSet next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v);
            }
            frontier = next & unseen;
            unseen &= ~next;
        }
    }
    return g.size() + components == static_cast<std::size_t>(g.order());
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) != (g.vertices() & ~bit(v))) return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    VertexSet rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.neighbors(v) & s) return false;
    }
    return true;
}

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw capacity_error("chromatic_number: brute force is limited to 16 vertices");
    if (n == 0) return 0;
    std::vector<int> colour(n, -1);
    // Backtracking k-colouring in vertex order; colours used so far bound the branching.
    std::function<bool(int, int, int)> colourable = [&](int v, int k, int used) -> bool {
        if (v == n) return true;
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (colour[u] == c && g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            colour[v] = c;
            if (colourable(v + 1, k, std::max(used, c + 1))) return true;
        }
        colour[v] = -1;
        return false;
    };
    for (int k = 1;; ++k)
        if (colourable(0, k, 0)) return k;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("cycle_graph: a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    check_order(static_cast<long long>(leaves) + 1, "star_graph");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

std::size_t balanced_tree_order(const BalancedTreeSpec& spec) {
    if (spec.branching.empty()) throw domain_error("balanced_tree: branching sequence is empty");
    // Saturate once the count leaves the representable range; only "too big" matters then.
    constexpr std::size_t cap = std::size_t{1} << 40;
    std::size_t total = 1;
    std::size_t level = 1;
    for (int b : spec.branching) {
        if (b < 1) throw domain_error("balanced_tree: branching factors must be positive");
        level = std::min(cap, level * static_cast<std::size_t>(b));
        total = std::min(cap, total + level);
    }
    return total;
}

Graph balanced_tree(const BalancedTreeSpec& spec) {
    std::size_t total = balanced_tree_order(spec);
    check_order(static_cast<long long>(total), "balanced_tree");
    Graph g(static_cast<int>(total));
    std::vector<int> level{0};
    int next = 1;
    for (int b : spec.branching) {
        std::vector<int> children;
        for (int parent : level)
            for (int c = 0; c < b; ++c) {
                g.add_edge(parent, next);
                children.push_back(next++);
            }
        level = std::move(children);
    }
    return g;
}

Graph complete_nary_tree(int n, int depth) {
    if (depth < 1) throw domain_error("complete_nary_tree: depth must be positive");
    return balanced_tree(BalancedTreeSpec{std::vector<int>(depth, n)});
}

Graph h_graph(const HGraphSpec& spec) {
    if (spec.clique < 1) throw domain_error("h_graph: clique size must be positive");
    if (spec.paths < 0 || spec.paths > spec.clique) throw domain_error("h_graph: need 0 <= k <= n");
    if (spec.path_length < 0) throw domain_error("h_graph: path length must be nonnegative");
    long long total = spec.clique + static_cast<long long>(spec.paths) * spec.path_length;
    check_order(total, "h_graph");
    Graph g = complete_graph(spec.clique);
    Graph out(static_cast<int>(total));
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int j = 0; j < spec.paths; ++j) {
        int prev = j;
        for (int i = 0; i < spec.path_length; ++i) {
            int v = spec.clique + j * spec.path_length + i;
            out.add_edge(prev, v);
            prev = v;
        }
    }
    return out;
}

}  // namespace sigroots
