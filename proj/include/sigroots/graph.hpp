#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sigroots {

using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per vertex.
///
/// Rows are kept symmetric and irreflexive and bits at or above n stay clear;
/// every mutator preserves that, so two graphs compare equal exactly when they
/// are the same labeled graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t size() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertices() const { return low_bits(n_); }
    std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<VertexSet, max_vertices> adj_{};
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const noexcept;
};

// Constructions.
Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// Relabel so that vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

// Predicates.
bool is_triangle_free(const Graph& g);
bool is_forest(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

/// Least k admitting a proper k-colouring; 0 on the null graph. Brute force, n <= 16.
int chromatic_number(const Graph& g);

// Families.
struct BalancedTreeSpec {
    /// (n_k, n_{k-1}, ..., n_1): the root has branching[0] children, and every
    /// vertex one level further down has the next entry's worth of children.
    std::vector<int> branching;
};

struct HGraphSpec {
    int clique = 1;       // n >= 1
    int paths = 0;        // k, 0 <= k <= n
    int path_length = 0;  // t >= 0, vertices per pendant path
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(int leaves);
/// Vertices are numbered breadth-first from the root (vertex 0).
Graph balanced_tree(const BalancedTreeSpec& spec);
Graph complete_nary_tree(int n, int depth);
/// K_n on vertices 0..n-1; pendant path j hangs off clique vertex j and uses
/// vertices n + j*t .. n + j*t + t - 1, the first of them adjacent to j.
Graph h_graph(const HGraphSpec& spec);

std::size_t balanced_tree_order(const BalancedTreeSpec& spec);

}  // namespace sigroots
