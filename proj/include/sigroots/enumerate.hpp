#pragma once

#include <vector>

#include "sigroots/graph.hpp"

namespace sigroots {

/// Relabeling that maximises the graph6 bit string among all labelings which
/// order vertices by their colour-refinement class. Isomorphic graphs get the
/// same canonical form.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);

/// Canonical form by exhaustive search over all n! labelings (minimum
/// upper-triangle encoding). Reference implementation for small n only.
Graph canonical_form_exhaustive(const Graph& g);

/// One representative (in canonical form) per isomorphism class of graphs
/// obtained by adding a vertex to some graph in `classes` with an arbitrary
/// neighbourhood (nonempty if `connected_extension`). Output sorted by graph6.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& classes, bool connected_extension);

inline constexpr int max_builtin_order = 7;

/// All graphs on n vertices up to isomorphism, optionally only connected ones.
/// Orders above 7 must come from graph6 files.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// All trees on n vertices up to isomorphism (leaf extension), 1 <= n <= 16.
std::vector<Graph> enumerate_trees(int n);

}  // namespace sigroots
