#include "specfactor/spectra.hpp"

#include <cmath>

namespace specfactor {

double hsf_bound(long edges, int order, int min_degree) {
  if (order < 1) throw precondition_error("hsf_bound: empty graph");
  if (min_degree < 0 || min_degree > order - 1) throw precondition_error("hsf_bound: min degree outside [0, n-1]");
  if (edges < 0 || 2 * edges > static_cast<long>(order) * (order - 1)) {
    throw precondition_error("hsf_bound: edge count outside [0, n(n-1)/2]");
  }
  const double d = min_degree;
  const double radicand = 2.0 * static_cast<double>(edges) - d * order + (d + 1.0) * (d + 1.0) / 4.0;
  if (radicand < 0) throw precondition_error("hsf_bound: negative radicand (inconsistent inputs)");
  return (d - 1.0) / 2.0 + std::sqrt(radicand);
}

SpectralComparison compare_spectral(const Graph& g1, const Graph& g2, double tol, double eig_tol) {
  if (!(tol > 0)) throw precondition_error("compare_spectral: tolerance must be positive");
  SpectralComparison out{SpectralOrder::tie_within_tol, spectral_radius(g1, eig_tol), spectral_radius(g2, eig_tol)};
  const double diff = out.first.value - out.second.value;
  if (diff > tol) {
    out.order = SpectralOrder::greater;
  } else if (diff < -tol) {
    out.order = SpectralOrder::less;
  }
  return out;
}

}  // namespace specfactor
