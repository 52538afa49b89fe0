#pragma once

#include <optional>
#include <vector>

#include "specfactor/graph.hpp"

namespace specfactor {

inline constexpr int kFactorOracleLimit = 20;
inline constexpr int kMatchingWitnessLimit = 20;
inline constexpr double kFeasibilityTolerance = 1e-9;

/// Per-vertex bounds g(v) <= f(v) on the weighted degree.
struct DegreeBounds {
  std::vector<int> lower;
  std::vector<int> upper;

  /// Constant bounds [a, b] on n vertices.
  static DegreeBounds uniform(int n, int a, int b);
  /// Throws precondition_error unless 0 <= lower <= upper pointwise and sizes match n.
  void validate(int n) const;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0;
};

/// Edge weights h: E -> [0,1] witnessing a fractional (g,f)-factor.
struct FactorCertificate {
  std::vector<WeightedEdge> edges;
};

/// A vertex set S with phi(S, T) <= -1, where T is determined by S.
struct DeficiencyWitness {
  VertexSet s;
  VertexSet t;
  long phi = 0;
};

struct Deficiency {
  VertexSet t;
  long phi = 0;
};

/// T = {v not in S : d_{G-S}(v) < g(v)} and phi = f(S) - g(T) + sum_{v in T} d_{G-S}(v).
Deficiency deficiency(const Graph& g, const DegreeBounds& bounds, const VertexSet& s);
Deficiency deficiency(const Graph& g, int a, int b, const VertexSet& s);

struct OracleDecision {
  bool has_factor = false;
  /// Minimizing S over all subsets when has_factor is false.
  std::optional<DeficiencyWitness> witness;
};

/// Exhaustive check of phi(S, T) >= 0 over all 2^n sets S, exact integers.
OracleDecision fractional_factor_oracle(const Graph& g, const DegreeBounds& bounds, int limit = kFactorOracleLimit);

struct LpDecision {
  bool has_factor = false;
  std::optional<FactorCertificate> certificate;
};

/// Decides the linear system {0 <= h(e) <= 1, g(v) <= sum_{e ~ v} h(e) <= f(v)}.
///
/// The system is solved as a bounded flow on the bipartite double cover
/// (source -> v' in [g(v), f(v)], u' -> v'' capacity 1 per arc, v'' -> sink in
/// [g(v), f(v)]); averaging the two arcs of each edge gives h. The flow is
/// integral, so weights land in {0, 1/2, 1} and the decision is exact.
/// Throws solver_error if the recovered certificate fails validation.
LpDecision fractional_factor_lp(const Graph& g, const DegreeBounds& bounds);

/// Checks every FactorCertificate invariant within `tol`.
bool validate_certificate(const Graph& g, const DegreeBounds& bounds, const FactorCertificate& cert,
                          double tol = kFeasibilityTolerance);

struct MatchingDecision {
  bool perfect = false;
  /// A maximum matching (perfect when `perfect`).
  std::vector<Edge> matching;
  /// Set S with o(G - S) > |S| when not perfect.
  VertexSet tutte_set;
};

/// Maximum matching by Edmonds' blossom search.
std::vector<Edge> maximum_matching(const Graph& g);

/// Perfect matching or a Tutte set.
///
/// Odd order answers S = {} at once. Otherwise the barrier is the Gallai-Edmonds
/// set A(G): neighbors of the vertices missed by some maximum matching.
/// `limit` bounds the exhaustive subset scan used only if that barrier fails
/// re-validation.
MatchingDecision has_perfect_matching(const Graph& g, int limit = kMatchingWitnessLimit);

enum class Sufficiency { applicable, not_applicable };

/// Edge-count sufficient condition: n >= a+1, delta >= a,
/// e >= C(n-1, 2) + (a+1)/2, and na even when a = b.
Sufficiency edge_count_sufficiency(const Graph& g, int a, int b);

}  // namespace specfactor
