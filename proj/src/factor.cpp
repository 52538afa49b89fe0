#include "specfactor/factor.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "max_flow.hpp"
#include "specfactor/errors.hpp"

namespace specfactor {

DegreeBounds DegreeBounds::uniform(int n, int a, int b) {
  if (a < 0 || a > b) throw precondition_error("DegreeBounds: need 0 <= a <= b");
  return {std::vector<int>(static_cast<std::size_t>(n), a), std::vector<int>(static_cast<std::size_t>(n), b)};
}

void DegreeBounds::validate(int n) const {
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n) {
    throw precondition_error("DegreeBounds: size does not match graph order");
  }
  for (std::size_t v = 0; v < lower.size(); ++v) {
    if (lower[v] < 0 || lower[v] > upper[v]) {
      throw precondition_error("DegreeBounds: need 0 <= g(v) <= f(v) at vertex " + std::to_string(v));
    }
  }
}

Deficiency deficiency(const Graph& g, const DegreeBounds& bounds, const VertexSet& s) {
  bounds.validate(g.order());
  Deficiency out{VertexSet(g.order()), 0};
  s.for_each([&](int v) { out.phi += bounds.upper[static_cast<std::size_t>(v)]; });
  for (int v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    const int d = (g.neighbors(v) - s).size();
    if (d < bounds.lower[static_cast<std::size_t>(v)]) {
      out.t.insert(v);
      out.phi += d - bounds.lower[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

Deficiency deficiency(const Graph& g, int a, int b, const VertexSet& s) {
  if (a < 1 || a > b) throw precondition_error("deficiency: need 1 <= a <= b");
  return deficiency(g, DegreeBounds::uniform(g.order(), a, b), s);
}

OracleDecision fractional_factor_oracle(const Graph& g, const DegreeBounds& bounds, int limit) {
  const int n = g.order();
  if (n > limit || n > 30) throw limit_exceeded("fractional_factor_oracle", n, std::min(limit, 30));
  bounds.validate(n);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbor_mask(v));

  long best = std::numeric_limits<long>::max();
  std::uint32_t best_s = 0;
  const std::uint32_t end = n == 32 ? 0 : (std::uint32_t{1} << n);
  std::uint32_t s = 0;
  do {
    long phi = 0;
    for (int v = 0; v < n; ++v) {
      const auto i = static_cast<std::size_t>(v);
      if ((s >> v) & 1U) {
        phi += bounds.upper[i];
        continue;
      }
      const int d = std::popcount(adj[i] & ~s);
      if (d < bounds.lower[i]) phi += d - bounds.lower[i];
    }
    if (phi < best) {
      best = phi;
      best_s = s;
    }
  } while (++s != end);

  if (best >= 0) return {true, std::nullopt};
  const VertexSet witness_s = VertexSet::from_mask(n, best_s);
  Deficiency d = deficiency(g, bounds, witness_s);
  return {false, DeficiencyWitness{witness_s, std::move(d.t), d.phi}};
}

LpDecision fractional_factor_lp(const Graph& g, const DegreeBounds& bounds) {
  const int n = g.order();
  bounds.validate(n);
  // 0 source, 1 sink, 2..n+1 left copies, n+2..2n+1 right copies, then super source / sink
  const int source = 0, sink = 1, super_source = 2 * n + 2, super_sink = 2 * n + 3;
  auto left = [](int v) { return 2 + v; };
  auto right = [n](int v) { return 2 + n + v; };
  detail::MaxFlow flow(2 * n + 4);
  std::vector<long> excess(static_cast<std::size_t>(2 * n + 4), 0);
  auto bounded_arc = [&](int from, int to, long lo, long hi) {
    flow.add_arc(from, to, hi - lo);
    excess[static_cast<std::size_t>(to)] += lo;
    excess[static_cast<std::size_t>(from)] -= lo;
  };
  for (int v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    bounded_arc(source, left(v), bounds.lower[i], bounds.upper[i]);
    bounded_arc(right(v), sink, bounds.lower[i], bounds.upper[i]);
  }
  const std::vector<Edge> edges = g.edges();
  std::vector<std::pair<int, int>> arc_ids;
  arc_ids.reserve(edges.size());
  for (const Edge& e : edges) {
    arc_ids.emplace_back(flow.add_arc(left(e.u), right(e.v), 1), flow.add_arc(left(e.v), right(e.u), 1));
  }
  flow.add_arc(sink, source, std::numeric_limits<long>::max() / 4);
  long demand = 0;
  for (int node = 0; node < 2 * n + 2; ++node) {
    const long x = excess[static_cast<std::size_t>(node)];
    if (x > 0) {
      flow.add_arc(super_source, node, x);
      demand += x;
    } else if (x < 0) {
      flow.add_arc(node, super_sink, -x);
    }
  }
  if (flow.run(super_source, super_sink) != demand) return {false, std::nullopt};

  FactorCertificate cert;
  cert.edges.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double w = 0.5 * static_cast<double>(flow.flow_on(arc_ids[i].first) + flow.flow_on(arc_ids[i].second));
    cert.edges.push_back({edges[i].u, edges[i].v, w});
  }
  if (!validate_certificate(g, bounds, cert)) {
    throw solver_error("fractional_factor_lp: recovered certificate violates degree bounds");
  }
  return {true, std::move(cert)};
}

bool validate_certificate(const Graph& g, const DegreeBounds& bounds, const FactorCertificate& cert, double tol) {
  const int n = g.order();
  if (static_cast<long>(cert.edges.size()) != g.edge_count()) return false;
  std::vector<double> load(static_cast<std::size_t>(n), 0.0);
  VertexSet seen_pairs(n * n);
  for (const auto& we : cert.edges) {
    if (we.u < 0 || we.v < 0 || we.u >= n || we.v >= n || !g.adjacent(we.u, we.v)) return false;
    const Edge e(we.u, we.v);
    if (seen_pairs.contains(e.u * n + e.v)) return false;
    seen_pairs.insert(e.u * n + e.v);
    if (!std::isfinite(we.weight) || we.weight < -tol || we.weight > 1.0 + tol) return false;
    load[static_cast<std::size_t>(we.u)] += we.weight;
    load[static_cast<std::size_t>(we.v)] += we.weight;
  }
  for (int v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (load[i] < bounds.lower[i] - tol || load[i] > bounds.upper[i] + tol) return false;
  }
  return true;
}

Sufficiency edge_count_sufficiency(const Graph& g, int a, int b) {
  if (a < 1 || a > b) throw precondition_error("edge_count_sufficiency: need 1 <= a <= b");
  const long n = g.order();
  const bool ok = n >= a + 1 && g.min_degree() >= a && 2 * g.edge_count() >= (n - 1) * (n - 2) + a + 1 &&
                  !(a == b && (n * a) % 2 != 0);
  return ok ? Sufficiency::applicable : Sufficiency::not_applicable;
}

}  // namespace specfactor
