#include "specfactor/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "specfactor/errors.hpp"
#include "specfactor/graph6.hpp"

namespace specfactor {

namespace {

using Rows = std::vector<std::uint64_t>;

// Replaces arbitrary integer keys by their dense rank.
std::vector<int> rank_colors(const std::vector<long>& keys) {
  std::vector<long> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return out;
}

int color_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<int> refine(const Rows& adj, std::vector<int> colors) {
  const int n = static_cast<int>(adj.size());
  int cells = color_count(colors);
  using Signature = std::pair<int, std::vector<int>>;
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = colors[static_cast<std::size_t>(v)];
      s.second.clear();
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m; m &= m - 1) {
        s.second.push_back(colors[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      std::sort(s.second.begin(), s.second.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colors[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == cells) return colors;
    cells = now;
  }
}

struct CanonicalSearch {
  const Rows& adj;
  int n;
  bool have_best = false;
  Rows best_rows;
  std::vector<int> best_labels;

  Rows relabeled(const std::vector<int>& label) const {
    Rows out(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      std::uint64_t row = 0;
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)]; m; m &= m - 1) {
        row |= std::uint64_t{1} << label[static_cast<std::size_t>(std::countr_zero(m))];
      }
      out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = row;
    }
    return out;
  }

  bool twins(int u, int v) const {
    const std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return ((adj[static_cast<std::size_t>(u)] ^ adj[static_cast<std::size_t>(v)]) & ~both) == 0;
  }

  void descend(std::vector<int> colors) {
    colors = refine(adj, std::move(colors));
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      Rows rows = relabeled(colors);
      if (!have_best || rows > best_rows) {
        have_best = true;
        best_rows = std::move(rows);
        best_labels = colors;
      }
      return;
    }
    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      if (std::any_of(explored.begin(), explored.end(), [&](int u) { return twins(u, v); })) continue;
      explored.push_back(v);
      std::vector<long> keys(static_cast<std::size_t>(n));
      for (int w = 0; w < n; ++w) {
        const long c = colors[static_cast<std::size_t>(w)];
        keys[static_cast<std::size_t>(w)] = 2 * c + ((c == target && w != v) ? 1 : 0);
      }
      descend(rank_colors(keys));
    }
  }
};

}  // namespace

std::vector<int> refine_degree_partition(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw limit_exceeded("refine_degree_partition", n, 64);
  Rows adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  return refine(adj, std::vector<int>(static_cast<std::size_t>(n), 0));
}

Graph canonical_graph(const Graph& g, int limit) {
  const int n = g.order();
  if (n > limit || n > 64) throw limit_exceeded("canonical_graph", n, std::min(limit, 64));
  Rows adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  CanonicalSearch search{adj, n, false, {}, {}};
  search.descend(std::vector<int>(static_cast<std::size_t>(n), 0));
  return n == 0 ? Graph(0) : permute(g, search.best_labels);
}

std::string canonical_form(const Graph& g, int limit) { return emit_graph6(canonical_graph(g, limit)); }

bool is_isomorphic(const Graph& g1, const Graph& g2, int limit) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<int> d1, d2;
  for (int v = 0; v < g1.order(); ++v) {
    d1.push_back(g1.degree(v));
    d2.push_back(g2.degree(v));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return canonical_graph(g1, limit) == canonical_graph(g2, limit);
}

}  // namespace specfactor
