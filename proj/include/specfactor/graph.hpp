#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specfactor/vertex_set.hpp"

namespace specfactor {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices {0, ..., n-1}.
///
/// Adjacency is one bitset row per vertex. Values are immutable once built;
/// use Graph::Builder (or the free constructors below) to make new ones.
class Graph {
 public:
  class Builder;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Throws precondition_error on loops, duplicate edges or out-of-range ends.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  long edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  int degree(int v) const { return rows_[static_cast<std::size_t>(v)].size(); }
  /// 0 for the null graph.
  int min_degree() const;
  int max_degree() const;
  /// Row as a packed mask; requires order() <= 64.
  std::uint64_t neighbor_mask(int v) const { return rows_[static_cast<std::size_t>(v)].mask(); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  long edge_count_ = 0;
};

class Graph::Builder {
 public:
  explicit Builder(int n);

  int order() const noexcept { return graph_.order(); }
  /// Adds uv; adding an existing edge is a no-op. Loops are rejected.
  Builder& add_edge(int u, int v);
  Builder& add_clique(std::span<const int> vertices);
  bool has_edge(int u, int v) const { return graph_.adjacent(u, v); }

  Graph build() &&;

 private:
  Graph graph_;
};

Graph complete(int n);
/// The edgeless graph I_n.
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);

/// G1 + G2: vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// G1 v G2: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);
/// Relabels vertex v as perm[v]; perm must be a permutation of {0..n-1}.
Graph permute(const Graph& g, std::span<const int> perm);
Graph complement(const Graph& g);
Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

struct InducedSubgraph {
  Graph graph;
  /// vertex_map[i] is the parent vertex of subgraph vertex i (increasing).
  std::vector<int> vertex_map;
};

/// Order-preserving relabeled subgraph induced by s.
InducedSubgraph induced(const Graph& g, const VertexSet& s);
/// Subgraph induced by V(g) minus `removed`.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);

/// Vertex sets of the connected components of g - removed, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// o(G - removed): number of components of odd order.
int odd_components(const Graph& g, const VertexSet& removed);

bool is_independent(const Graph& g, const VertexSet& s);

/// Visits every independent set I with |I| = parity (mod 2), by increasing size.
/// The visitor returns false to stop early. Requires order() <= 64.
void for_each_independent_set(const Graph& g, int parity,
                              const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> independent_sets_of_parity(const Graph& g, int parity);

inline constexpr int kHamiltonLimit = 20;

/// Exact subset dynamic program over (visited set, endpoint) states.
bool hamilton_path_exists(const Graph& g, int limit = kHamiltonLimit);

}  // namespace specfactor
