#include <bit>
#include <queue>

#include "specfactor/errors.hpp"
#include "specfactor/factor.hpp"

namespace specfactor {

namespace {

// Edmonds' blossom search with explicit base tracking, O(n^3).
class Blossom {
 public:
  explicit Blossom(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).members();
    match_.assign(static_cast<std::size_t>(n_), -1);
  }

  void solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] != -1) continue;
      for (int w : adj_[idx(v)]) {
        if (match_[idx(w)] == -1) {
          match_[idx(v)] = w;
          match_[idx(w)] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[idx(root)] != -1) continue;
      for (int u = search(root); u != -1;) {
        const int pu = parent_[idx(u)];
        const int next = match_[idx(pu)];
        match_[idx(u)] = pu;
        match_[idx(pu)] = u;
        u = next;
      }
    }
  }

  /// Vertices missed by at least one maximum matching (valid after solve()).
  VertexSet deficient_vertices() {
    VertexSet out(n_);
    for (int root = 0; root < n_; ++root) {
      if (match_[idx(root)] != -1) continue;
      search(root);
      for (int v = 0; v < n_; ++v) {
        if (even_[idx(v)]) out.insert(v);
      }
    }
    return out;
  }

  std::vector<Edge> matching() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v) {
      if (match_[idx(v)] > v) out.emplace_back(v, match_[idx(v)]);
    }
    return out;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(idx(n_), false);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = true;
      in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  // Grows an alternating tree from root; returns an exposed endpoint or -1.
  int search(int root) {
    even_.assign(idx(n_), false);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
    even_[idx(root)] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          const int b = lowest_common_base(v, to);
          in_blossom_.assign(idx(n_), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[idx(base_[idx(i)])]) continue;
            base_[idx(i)] = b;
            if (!even_[idx(i)]) {
              even_[idx(i)] = true;
              q.push(i);
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          const int mate = match_[idx(to)];
          even_[idx(mate)] = true;
          q.push(mate);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> even_, in_blossom_;
};

bool is_tutte_set(const Graph& g, const VertexSet& s) { return odd_components(g, s) > s.size(); }

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
  Blossom solver(g);
  solver.solve();
  return solver.matching();
}

MatchingDecision has_perfect_matching(const Graph& g, int limit) {
  const int n = g.order();
  Blossom solver(g);
  solver.solve();
  MatchingDecision out{false, solver.matching(), VertexSet(n)};
  if (2 * static_cast<int>(out.matching.size()) == n) {
    out.perfect = true;
    return out;
  }
  if (n % 2 == 1) return out;

  const VertexSet deficient = solver.deficient_vertices();
  VertexSet barrier(n);
  deficient.for_each([&](int v) { barrier |= g.neighbors(v); });
  barrier -= deficient;
  if (is_tutte_set(g, barrier)) {
    out.tutte_set = std::move(barrier);
    return out;
  }

  if (n > limit || n > 30) throw limit_exceeded("has_perfect_matching witness search", n, std::min(limit, 30));
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const VertexSet candidate = VertexSet::from_mask(n, s);
    if (is_tutte_set(g, candidate)) {
      out.tutte_set = candidate;
      return out;
    }
  }
  throw solver_error("has_perfect_matching: no Tutte set found for a graph without a perfect matching");
}

}  // namespace specfactor
