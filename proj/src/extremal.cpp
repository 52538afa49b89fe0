#include "specfactor/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specfactor/errors.hpp"

namespace specfactor {

namespace {

// A graph under composition whose classes are still plain vertex lists.
struct Shape {
  Graph graph;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> members;
};

Shape leaf(Graph g, std::string label) {
  Shape out{std::move(g), {}, {}};
  if (out.graph.order() > 0) {
    std::vector<int> all(static_cast<std::size_t>(out.graph.order()));
    std::iota(all.begin(), all.end(), 0);
    out.labels.push_back(std::move(label));
    out.members.push_back(std::move(all));
  }
  return out;
}

Shape combine(const Shape& a, const Shape& b, bool joined) {
  Shape out{joined ? join(a.graph, b.graph) : disjoint_union(a.graph, b.graph), a.labels, a.members};
  const int shift = a.graph.order();
  for (std::size_t c = 0; c < b.labels.size(); ++c) {
    std::vector<int> moved = b.members[c];
    for (int& v : moved) v += shift;
    // classes sharing a label are merged (repeated clique components)
    auto it = std::find(out.labels.begin(), out.labels.end(), b.labels[c]);
    if (it == out.labels.end()) {
      out.labels.push_back(b.labels[c]);
      out.members.push_back(std::move(moved));
    } else {
      auto& dst = out.members[static_cast<std::size_t>(it - out.labels.begin())];
      dst.insert(dst.end(), moved.begin(), moved.end());
    }
  }
  return out;
}

Shape join_of(const Shape& a, const Shape& b) { return combine(a, b, true); }
Shape union_of(const Shape& a, const Shape& b) { return combine(a, b, false); }

// Finalizes with classes listed in `order`; labels absent from the shape are skipped.
StructuredGraph finish(const Shape& shape, const std::vector<std::string>& order) {
  StructuredGraph out{shape.graph, {}, {}};
  const int n = shape.graph.order();
  for (const auto& label : order) {
    auto it = std::find(shape.labels.begin(), shape.labels.end(), label);
    if (it == shape.labels.end()) continue;
    out.labels.push_back(label);
    out.classes.emplace_back(n, std::span<const int>(shape.members[static_cast<std::size_t>(it - shape.labels.begin())]));
  }
  if (out.labels.size() != shape.labels.size()) throw precondition_error("structured graph: unlisted class");
  return out;
}

std::string part_label(int size) { return "parts_" + std::to_string(size); }

std::vector<std::string> part_labels(std::span<const int> parts) {
  std::vector<std::string> out;
  for (const auto& [size, count] : detail::group_parts(parts)) out.push_back(part_label(size));
  return out;
}

Shape clique_union(std::span<const int> parts) {
  Shape out = leaf(Graph(0), "");
  for (int p : parts) out = union_of(out, leaf(complete(p), part_label(p)));
  return out;
}

long double quotient_rho(const QuotientMatrix<long double>& q) { return quotient_spectral_radius(q); }

}  // namespace

const VertexSet& StructuredGraph::cls(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw precondition_error("StructuredGraph: no class labelled " + label);
  return classes[static_cast<std::size_t>(it - labels.begin())];
}

StructuredGraph build_factor_extremal(int n, int a) {
  if (a < 1 || n < a + 1) throw precondition_error("build_factor_extremal: need a >= 1, n >= a + 1");
  const Shape shape =
      join_of(leaf(complete(a - 1), "K_{a-1}"), union_of(leaf(complete(n - a), "K_{n-a}"), leaf(complete(1), "K_1")));
  return finish(shape, {"K_{a-1}", "K_{n-a}", "K_1"});
}

StructuredGraph build_spanning_star(int n, int k) {
  if (k < 0 || n <= k) throw precondition_error("build_spanning_star: need n > k >= 0");
  return finish(join_of(leaf(complete(k), "K_k"), leaf(empty(n - k), "I_{n-k}")), {"K_k", "I_{n-k}"});
}

StructuredGraph build_g_double_prime(int n, int s, int r) {
  const int m = n - 2 * s - r - 1;
  if (s < 1 || r < 0 || m < 1) throw precondition_error("build_g_double_prime: need s >= 1, r >= 0, n >= 2s + r + 2");
  const Shape star = join_of(leaf(complete(s), "K_s"), leaf(empty(r), "I_r"));
  const Shape shape = join_of(star, union_of(leaf(complete(m), "K_m"), leaf(empty(s + 1), "I_{s+1}")));
  return finish(shape, {"K_s", "I_{s+1}", "I_r", "K_m"});
}

StructuredGraph build_id_extremal(int n, int delta, int r) {
  if (delta < 1 || r < 1 || n < 2 * delta + r + 2) {
    throw precondition_error("build_id_extremal: need delta >= 1, r >= 1, n >= 2 delta + r + 2");
  }
  return build_g_double_prime(n, delta, r);
}

StructuredGraph build_g_prime(int n, int s, int r, std::span<const int> parts) {
  if (s < 0 || r < 0) throw precondition_error("build_g_prime: negative parameter");
  if (static_cast<int>(parts.size()) != s + 2) throw precondition_error("build_g_prime: need exactly s + 2 parts");
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw precondition_error("build_g_prime: parts must be non-increasing");
  }
  for (int p : parts) {
    if (p < 1 || p % 2 == 0) throw precondition_error("build_g_prime: parts must be positive odd integers");
  }
  if (std::accumulate(parts.begin(), parts.end(), 0) != n - r - s) {
    throw precondition_error("build_g_prime: parts must sum to n - r - s");
  }
  const Shape shape = join_of(leaf(empty(r), "I_r"), join_of(leaf(complete(s), "K_s"), clique_union(parts)));
  std::vector<std::string> order{"K_s"};
  for (auto& label : part_labels(parts)) order.push_back(std::move(label));
  order.emplace_back("I_r");
  return finish(shape, order);
}

StructuredGraph build_g_triple_prime(int n, int s, int r, int delta) {
  const int p = delta - s - r + 1;
  const int big = n - s - r - (s + 1) * p;
  if (s < 0 || r < 1 || s >= delta || p < 1 || big < 1) {
    throw precondition_error("build_g_triple_prime: need 0 <= s < delta, r >= 1, delta - s - r + 1 >= 1, positive remainder");
  }
  Shape small = leaf(Graph(0), "");
  for (int i = 0; i <= s; ++i) small = union_of(small, leaf(complete(p), "K_p"));
  const Shape inner = join_of(leaf(complete(s), "K_s"), union_of(leaf(complete(big), "K_big"), small));
  return finish(join_of(leaf(empty(r), "I_r"), inner), {"K_s", "K_p", "I_r", "K_big"});
}

StructuredGraph build_clique_join(int s, std::span<const int> parts) {
  if (s < 0) throw precondition_error("build_clique_join: negative clique");
  std::vector<int> sorted(parts.begin(), parts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (!sorted.empty() && sorted.back() < 1) throw precondition_error("build_clique_join: parts must be positive");
  std::vector<std::string> order{"K_s"};
  for (auto& label : part_labels(sorted)) order.push_back(std::move(label));
  return finish(join_of(leaf(complete(s), "K_s"), clique_union(sorted)), order);
}

JoinComparison check_join_comparison(int n, int s, int t, int p, std::span<const int> parts, double margin) {
  if (s < 0 || t < 1 || p < 1 || static_cast<int>(parts.size()) != t) {
    throw precondition_error("check_join_comparison: need s >= 0, p >= 1 and t parts");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw precondition_error("check_join_comparison: parts must be non-increasing");
  }
  if (parts.back() < p) throw precondition_error("check_join_comparison: every part must be at least p");
  if (std::accumulate(parts.begin(), parts.end(), 0) + s != n) {
    throw precondition_error("check_join_comparison: parts and s must add to n");
  }
  const int top = n - s - p * (t - 1);
  if (parts.front() >= top) throw precondition_error("check_join_comparison: n_1 must be below n - s - p(t-1)");

  std::vector<int> extreme(static_cast<std::size_t>(t), p);
  extreme.front() = top;
  JoinComparison out;
  out.lhs = static_cast<double>(quotient_rho(clique_join_quotient<long double>(s, parts)));
  out.rhs = static_cast<double>(quotient_rho(clique_join_quotient<long double>(s, extreme)));
  out.holds = out.lhs < out.rhs - margin;
  return out;
}

FactorTightness verify_factor_tightness(int n, int a, int b) {
  FactorTightness out;
  if (a < 1 || a > b || n < a + 1) {
    out.detail = "invalid parameters";
    return out;
  }
  const StructuredGraph g = build_factor_extremal(n, a);
  const DegreeBounds bounds = DegreeBounds::uniform(n, a, b);
  out.lp_has_factor = fractional_factor_lp(g.graph, bounds).has_factor;
  if (n <= kFactorOracleLimit) out.oracle_has_factor = fractional_factor_oracle(g.graph, bounds).has_factor;
  const VertexSet none(n);
  Deficiency d = deficiency(g.graph, bounds, none);
  out.witness = {none, std::move(d.t), d.phi};

  std::ostringstream why;
  if (out.lp_has_factor) why << "flow route found a factor; ";
  if (out.oracle_has_factor.value_or(false)) why << "subset oracle found a factor; ";
  if (out.witness.phi > -1) why << "phi(empty, T) = " << out.witness.phi << "; ";
  if (out.witness.t != g.cls("K_1")) why << "T is not the pendant vertex; ";
  out.detail = why.str();
  out.passed = out.detail.empty();
  return out;
}

double cubic_threshold(int delta, int r) {
  const double d = delta, x = r;
  return d * d * d - (x - 3) / 2 * d * d - (x * x - 2 * x - 4) / 2 * d - (x * x - 3 * x - 3) / 2;
}

long claim6_polynomial(long n, long s, long r, long delta) {
  return (s * r + 2 * r) * n + (2 * r - 1) * s * s * s + (2 * r * r - 2 * delta * r + delta + 1) * s * s +
         (r * r * r - delta * r * r - r * r - 3 * delta * r - 2 * r + 1) * s + r * r * r - delta * r * r - 3 * r * r -
         2 * delta * r - 3 * r;
}

ClaimResult verify_claim5(int n, int s, int r, int delta, bool explore, double margin) {
  ClaimResult out;
  if (r < 1 || delta < 1 || s < 1 || n < 2 * s + r + 2 || n < 2 * delta + r + 2) {
    out.note = "construction undefined";
    return out;
  }
  out.in_regime = s >= delta + 1 && n >= 20 * delta + r + 8 && delta >= 3 * r + 1;
  if (!out.in_regime && !explore) {
    out.note = "outside s >= delta+1, n >= 20 delta + r + 8, delta >= 3r+1";
    return out;
  }
  out.lhs = static_cast<double>(quotient_rho(g_double_prime_quotient<long double>(n, s, r)));
  out.rhs = static_cast<double>(quotient_rho(g_double_prime_quotient<long double>(n, delta, r)));
  out.status = out.lhs < out.rhs - margin ? ClaimStatus::pass : ClaimStatus::fail;
  if (!out.in_regime) out.note = "exploration";
  return out;
}

ClaimResult verify_claim6(int n, int s, int r, int delta, bool explore, double margin) {
  ClaimResult out;
  const int p = delta - s - r + 1;
  if (r < 1 || s < 0 || s >= delta || p < 1 || n - s - r - (s + 1) * p < 1) {
    out.note = "construction undefined";
    return out;
  }
  out.in_regime = delta >= 3 * r + 1 && n >= cubic_threshold(delta, r);
  if (!out.in_regime && !explore) {
    out.note = "outside delta >= 3r+1, n >= cubic threshold";
    return out;
  }
  out.lhs = static_cast<double>(quotient_rho(g_triple_prime_quotient<long double>(n, s, r, delta)));
  out.rhs = n - r - 1 - (s + 1) * (delta - s + 1);
  out.f_value = claim6_polynomial(n, s, r, delta);
  if (n >= 2 * delta + r + 2) {
    out.extremal_rho = static_cast<double>(quotient_rho(g_double_prime_quotient<long double>(n, delta, r)));
  }
  const bool bound_ok = out.lhs < out.rhs - margin;
  out.status = bound_ok && *out.f_value >= 0 ? ClaimStatus::pass : ClaimStatus::fail;

  std::ostringstream note;
  if (!out.in_regime) note << "exploration; ";
  if (!bound_ok) {
    const int big = n - s - r - (s + 1) * p;
    note << "contains a clique on " << big + s + 1 << " vertices, so rho''' >= " << big + s << "; ";
  }
  if (*out.f_value < 0) note << "f(n) < 0; ";
  out.note = note.str();
  return out;
}

}  // namespace specfactor
