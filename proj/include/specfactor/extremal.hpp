#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specfactor/factor.hpp"
#include "specfactor/graph.hpp"
#include "specfactor/spectra.hpp"

namespace specfactor {

/// A graph built from joins and unions together with its construction classes.
///
/// `classes` is an equitable partition known by construction; `labels` names
/// each class ("K_s", "I_r", ...).
struct StructuredGraph {
  Graph graph;
  std::vector<VertexSet> classes;
  std::vector<std::string> labels;

  /// Class by label; throws precondition_error when absent.
  const VertexSet& cls(const std::string& label) const;

  template <typename Scalar = double>
  QuotientMatrix<Scalar> quotient() const {
    return quotient_matrix<Scalar>(graph, classes);
  }
};

/// K_{a-1} v (K_{n-a} + K_1); classes K_{a-1} (omitted when a = 1), K_{n-a}, K_1.
StructuredGraph build_factor_extremal(int n, int a);

/// S_{n,k} = K_k v I_{n-k}; classes K_k (omitted when k = 0), I_{n-k}.
StructuredGraph build_spanning_star(int n, int k);

/// S_{s+r,s} v (K_{n-2s-r-1} + I_{s+1}); classes K_s, I_{s+1}, I_r, K_{n-2s-r-1}.
StructuredGraph build_g_double_prime(int n, int s, int r);

/// S_{delta+r,delta} v (K_{n-2delta-r-1} + I_{delta+1}), the same layout as
/// build_g_double_prime at s = delta.
StructuredGraph build_id_extremal(int n, int delta, int r);

/// I_r v (K_s v (K_{n_1} + ... + K_{n_{s+2}})) for odd non-increasing parts
/// summing to n - r - s. Classes K_s, one per distinct part size (largest
/// first, labelled "parts_<size>"), then I_r.
StructuredGraph build_g_prime(int n, int s, int r, std::span<const int> parts);

/// I_r v (K_s v (K_{n-s-r-(s+1)(delta-s-r+1)} + (s+1) K_{delta-s-r+1}));
/// classes K_s (omitted when s = 0), (s+1)K_p, I_r, K_big.
StructuredGraph build_g_triple_prime(int n, int s, int r, int delta);

/// K_s v (K_{n_1} + ... + K_{n_t}); classes K_s (omitted when s = 0) then one
/// per distinct part size, largest first.
StructuredGraph build_clique_join(int s, std::span<const int> parts);

// Closed-form quotients with the same class layout as the builders above,
// for orders where the adjacency matrix is never materialized.
template <typename Scalar = double>
QuotientMatrix<Scalar> factor_extremal_quotient(int n, int a);
template <typename Scalar = double>
QuotientMatrix<Scalar> g_double_prime_quotient(int n, int s, int r);
template <typename Scalar = double>
QuotientMatrix<Scalar> g_triple_prime_quotient(int n, int s, int r, int delta);
template <typename Scalar = double>
QuotientMatrix<Scalar> clique_join_quotient(int s, std::span<const int> parts);

struct JoinComparison {
  bool holds = false;
  double lhs = 0;  // rho(K_s v (K_{n_1} + ... + K_{n_t}))
  double rhs = 0;  // rho(K_s v (K_{n-s-p(t-1)} + (t-1) K_p))
};

/// Strict join comparison: lhs < rhs - margin. Throws precondition_error when
/// parts are not non-increasing, some part is below p, the sizes do not add
/// to n, or n_1 already equals n - s - p(t-1).
JoinComparison check_join_comparison(int n, int s, int t, int p, std::span<const int> parts,
                                     double margin = kCompareTolerance);

struct FactorTightness {
  bool passed = false;
  bool lp_has_factor = true;
  std::optional<bool> oracle_has_factor;
  DeficiencyWitness witness;
  std::string detail;
};

/// Confirms build_factor_extremal(n, a) has no fractional [a,b]-factor.
/// Failures are reported in the result, never thrown.
FactorTightness verify_factor_tightness(int n, int a, int b);

enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
  ClaimStatus status = ClaimStatus::skipped;
  bool in_regime = false;
  double lhs = 0;
  double rhs = 0;
  /// Claim 6 only: the auxiliary polynomial f(n).
  std::optional<long> f_value;
  /// Claim 6 only: rho of the extremal graph S_{delta+r,delta} v (...), for context.
  std::optional<double> extremal_rho;
  std::string note;
};

/// n-threshold delta^3 - (r-3)/2 delta^2 - (r^2-2r-4)/2 delta - (r^2-3r-3)/2.
double cubic_threshold(int delta, int r);

/// (sr+2r)n + (2r-1)s^3 + (2r^2-2 delta r+delta+1)s^2
///   + (r^3-delta r^2-r^2-3 delta r-2r+1)s + r^3-delta r^2-3r^2-2 delta r-3r.
long claim6_polynomial(long n, long s, long r, long delta);

/// rho(G'') < rho(S_{delta+r,delta} v (K_{n-2delta-r-1} + I_{delta+1})) for
/// s >= delta+1, n >= 20 delta + r + 8, delta >= 3r+1. Out-of-regime inputs are
/// skipped unless `explore` is set, in which case they are evaluated with
/// in_regime = false.
ClaimResult verify_claim5(int n, int s, int r, int delta, bool explore = false,
                          double margin = kCompareTolerance);

/// rho(G''') < n - r - 1 - (s+1)(delta - s + 1) and f(n) >= 0, for s < delta
/// and n at or above cubic_threshold(delta, r).
ClaimResult verify_claim6(int n, int s, int r, int delta, bool explore = false,
                          double margin = kCompareTolerance);

}  // namespace specfactor

#include "specfactor/extremal_quotients.hpp"
