#include "specfactor/graph.hpp"

#include <algorithm>
#include <string>

#include "specfactor/errors.hpp"

namespace specfactor {

Graph::Graph(int n) {
  if (n < 0) throw precondition_error("Graph: negative order");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw precondition_error("Graph: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") outside vertex range");
    }
    if (e.u == e.v) throw precondition_error("Graph: self-loop at " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) {
      throw precondition_error("Graph: parallel edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ")");
    }
    rows_[static_cast<std::size_t>(e.u)].insert(e.v);
    rows_[static_cast<std::size_t>(e.v)].insert(e.u);
    ++edge_count_;
  }
}

int Graph::min_degree() const {
  int best = order() == 0 ? 0 : order();
  for (int v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph::Builder::Builder(int n) : graph_(n) {}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
  const int n = graph_.order();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw precondition_error("Graph::Builder: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") outside vertex range");
  }
  if (u == v) throw precondition_error("Graph::Builder: self-loop at " + std::to_string(u));
  if (!graph_.adjacent(u, v)) {
    graph_.rows_[static_cast<std::size_t>(u)].insert(v);
    graph_.rows_[static_cast<std::size_t>(v)].insert(u);
    ++graph_.edge_count_;
  }
  return *this;
}

Graph::Builder& Graph::Builder::add_clique(std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
  }
  return *this;
}

Graph Graph::Builder::build() && { return std::move(graph_); }

Graph complete(int n) {
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  Graph::Builder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) throw precondition_error("cycle: order below 3");
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

namespace {

void copy_edges(Graph::Builder& b, const Graph& g, int offset) {
  for (const Edge& e : g.edges()) b.add_edge(e.u + offset, e.v + offset);
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph::Builder b(g1.order() + g2.order());
  copy_edges(b, g1, 0);
  copy_edges(b, g2, g1.order());
  return std::move(b).build();
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph::Builder b(n1 + g2.order());
  copy_edges(b, g1, 0);
  copy_edges(b, g2, n1);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < g2.order(); ++v) b.add_edge(u, n1 + v);
  }
  return std::move(b).build();
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw precondition_error("permute: wrong permutation length");
  VertexSet seen(n);
  for (int p : perm) {
    if (p < 0 || p >= n || seen.contains(p)) throw precondition_error("permute: not a permutation");
    seen.insert(p);
  }
  Graph::Builder b(n);
  for (const Edge& e : g.edges()) {
    b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph remove_edge(const Graph& g, Edge e) {
  if (!g.adjacent(e.u, e.v)) throw precondition_error("remove_edge: edge not present");
  std::vector<Edge> es = g.edges();
  std::erase(es, e);
  return Graph(g.order(), es);
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> es = g.edges();
  es.push_back(e);
  return Graph(g.order(), es);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  s.for_each([&](int v) {
    if (v >= g.order()) throw precondition_error("induced: vertex " + std::to_string(v) + " out of range");
  });
  InducedSubgraph out;
  out.vertex_map = s.members();
  const int k = static_cast<int>(out.vertex_map.size());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(out.vertex_map[static_cast<std::size_t>(i)])] = i;
  Graph::Builder b(k);
  for (int i = 0; i < k; ++i) {
    g.neighbors(out.vertex_map[static_cast<std::size_t>(i)]).for_each([&](int w) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > i) b.add_edge(i, j);
    });
  }
  out.graph = std::move(b).build();
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  VertexSet keep = VertexSet::full(g.order());
  keep -= removed;
  return induced(g, keep);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const int n = g.order();
  VertexSet unseen = VertexSet::full(n);
  unseen -= removed;
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int root = unseen.first(); root >= 0; root = unseen.first()) {
    VertexSet comp(n);
    comp.insert(root);
    unseen.erase(root);
    stack.assign(1, root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      VertexSet next = g.neighbors(v) & unseen;
      next.for_each([&](int w) {
        comp.insert(w);
        stack.push_back(w);
      });
      unseen -= next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, VertexSet(g.order())); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

// Mask flood fill for order <= 64.
int odd_components_small(const Graph& g, std::uint64_t alive) {
  int odd = 0;
  while (alive) {
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t grow = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) grow |= g.neighbor_mask(std::countr_zero(f));
      grow &= alive & ~comp;
      comp |= grow;
      frontier = grow;
    }
    if (std::popcount(comp) & 1) ++odd;
    alive &= ~comp;
  }
  return odd;
}

}  // namespace

int odd_components(const Graph& g, const VertexSet& removed) {
  if (g.order() <= 64) {
    const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    const std::uint64_t gone = removed.universe() == 0 ? 0 : removed.mask();
    return odd_components_small(g, all & ~gone);
  }
  int odd = 0;
  for (const auto& c : components(g, removed)) odd += c.size() & 1;
  return odd;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

namespace {

struct IndependentSearch {
  const Graph& g;
  int n;
  int target = 0;
  bool stopped = false;
  bool found_any = false;
  const std::function<bool(const VertexSet&)>& visit;

  void extend(std::uint64_t chosen, std::uint64_t candidates, int remaining) {
    if (stopped) return;
    if (remaining == 0) {
      found_any = true;
      if (!visit(VertexSet::from_mask(n, chosen))) stopped = true;
      return;
    }
    if (std::popcount(candidates) < remaining) return;
    for (std::uint64_t c = candidates; c && !stopped; c &= c - 1) {
      const int v = std::countr_zero(c);
      const std::uint64_t later = c & (c - 1);
      extend(chosen | (std::uint64_t{1} << v), later & ~g.neighbor_mask(v), remaining - 1);
    }
  }
};

}  // namespace

void for_each_independent_set(const Graph& g, int parity,
                              const std::function<bool(const VertexSet&)>& visit) {
  const int n = g.order();
  if (n > 64) throw limit_exceeded("for_each_independent_set", n, 64);
  if (parity != 0 && parity != 1) throw precondition_error("for_each_independent_set: parity must be 0 or 1");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  IndependentSearch search{g, n, 0, false, false, visit};
  for (int k = parity; k <= n && !search.stopped; k += 2) {
    search.found_any = false;
    search.extend(0, all, k);
    // no independent set of size k means none of size k + 2
    if (!search.found_any) break;
  }
}

std::vector<VertexSet> independent_sets_of_parity(const Graph& g, int parity) {
  std::vector<VertexSet> out;
  for_each_independent_set(g, parity, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool hamilton_path_exists(const Graph& g, int limit) {
  const int n = g.order();
  if (n < 1) throw precondition_error("hamilton_path_exists: empty graph");
  if (n > limit || n > 25) throw limit_exceeded("hamilton_path_exists", n, std::min(limit, 25));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbor_mask(v));
    ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t here = ends[mask];
    if (!here) continue;
    if (mask == full) return true;
    for (std::uint32_t e = here; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (std::uint32_t nxt = adj[static_cast<std::size_t>(v)] & ~mask; nxt; nxt &= nxt - 1) {
        const int w = std::countr_zero(nxt);
        ends[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return false;
}

}  // namespace specfactor
