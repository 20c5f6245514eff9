#pragma once

#include "sigroots/graph.hpp"
#include "sigroots/polynomial.hpp"

namespace sigroots {

inline constexpr int max_sigma_order = 16;
inline constexpr int max_matching_order = 24;
inline constexpr int max_characteristic_order = 32;

/// a[i] = number of partitions of V(g) into i nonempty independent sets, by
/// Zykov addition-contraction down to complete graphs.
PartitionPoly sigma_partition_counts(const Graph& g);

/// Same counts by listing every set partition of V(g) (restricted growth
/// strings) and keeping the independent ones. Oracle for small graphs.
PartitionPoly sigma_partition_counts_brute_force(const Graph& g);

IntPoly sigma_poly(const Graph& g);
IntPoly chromatic_poly(const Graph& g);
/// sigma of the complement.
IntPoly adjoint_poly(const Graph& g);

/// sum_i (-1)^i m_i x^(n-2i), m_i = number of i-edge matchings.
IntPoly matching_poly(const Graph& g);
/// Matching counts m_0, m_1, ... by enumerating edge subsets. Oracle, e <= 24.
std::vector<Integer> matching_counts_brute_force(const Graph& g);

/// det(xI - A(g)) via the division-free Berkowitz recursion.
IntPoly characteristic_poly(const Graph& g);

/// sigma(complement(g), -x^2) for triangle-free g; equals (-x)^n m(g, x).
IntPoly sigma_of_complement_substituted(const Graph& g);

/// sigma of the edgeless graph on n vertices: sum_i S(n, i) x^i. Any n >= 0.
IntPoly edgeless_sigma(int n);

/// Adjoint polynomial of H_{n,k}^t from its clique partitions: s of the k
/// pendant paths put their first vertex in a block with its clique vertex,
/// the remaining n - s clique vertices form an arbitrary set partition, and
/// each path remainder splits into singletons and adjacent pairs. Agrees with
/// adjoint_poly(h_graph(spec)) and scales to the full 64-vertex capacity.
IntPoly h_graph_adjoint_poly(const HGraphSpec& spec);

/// Number of proper colourings of g with k colours, by exhaustive search. Oracle.
Integer count_proper_colourings(const Graph& g, int k);

}  // namespace sigroots
