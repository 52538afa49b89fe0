#pragma once

#include <string>
#include <vector>

#include "specfactor/graph.hpp"

namespace specfactor {

inline constexpr int kCanonicalLimit = 12;

/// Canonical relabeling: isomorphic inputs produce identical graphs.
///
/// Search individualizes vertices of the first non-singleton cell of a
/// degree-refined ordered partition and keeps the lexicographically largest
/// adjacency among the discrete leaves. Twin vertices (equal neighborhoods up to
/// each other) in the target cell are explored once, since swapping them is an
/// automorphism fixing everything individualized so far.
Graph canonical_graph(const Graph& g, int limit = kCanonicalLimit);

/// graph6 text of canonical_graph(g).
std::string canonical_form(const Graph& g, int limit = kCanonicalLimit);

bool is_isomorphic(const Graph& g1, const Graph& g2, int limit = kCanonicalLimit);

/// Stable color refinement starting from the all-equal coloring; colors are
/// label-invariant ranks 0..k-1.
std::vector<int> refine_degree_partition(const Graph& g);

}  // namespace specfactor
