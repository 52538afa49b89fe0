#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specfactor/errors.hpp"
#include "specfactor/graph.hpp"

namespace specfactor {

inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kCompareTolerance = 1e-8;
inline constexpr int kPowerIterationCap = 200000;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct SpectralEstimate {
  Scalar value{};
  /// max-norm of A x - value x for the unit iterate at termination
  Scalar residual{};
  int iterations = 0;
};

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Graph& g) {
  Matrix<Scalar> a = Matrix<Scalar>::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = Scalar(1);
  return a;
}

/// A x without materializing A.
template <typename Scalar>
Vector<Scalar> adjacency_times(const Graph& g, const Vector<Scalar>& x) {
  Vector<Scalar> y(g.order());
  for (int v = 0; v < g.order(); ++v) {
    Scalar sum(0);
    g.neighbors(v).for_each([&](int w) { sum += x(w); });
    y(v) = sum;
  }
  return y;
}

namespace detail {

// Shifted power iteration on A + I from the all-ones vector; g must be connected.
template <typename Scalar>
std::pair<SpectralEstimate<Scalar>, Vector<Scalar>> power_iterate(const Graph& g, Scalar tol, int cap) {
  using std::sqrt;
  const int n = g.order();
  Vector<Scalar> x = Vector<Scalar>::Constant(n, Scalar(1) / sqrt(Scalar(n)));
  for (int it = 1; it <= cap; ++it) {
    const Vector<Scalar> ax = adjacency_times(g, x);
    const Scalar rho = x.dot(ax);
    const Scalar residual = (ax - rho * x).cwiseAbs().maxCoeff();
    if (residual <= tol) return {SpectralEstimate<Scalar>{rho, residual, it}, x};
    Vector<Scalar> y = ax + x;
    x = y / y.norm();
  }
  throw convergence_error("power iteration: no convergence within " + std::to_string(cap) + " iterations (n=" +
                          std::to_string(n) + ")");
}

}  // namespace detail

/// Largest adjacency eigenvalue by power iteration.
///
/// Disconnected graphs are handled per component and the maximum is returned.
/// Throws convergence_error when the cap is hit; dense_spectral_radius is the fallback.
template <typename Scalar = double>
SpectralEstimate<Scalar> spectral_radius(const Graph& g, Scalar tol = Scalar(kEigenTolerance),
                                         int cap = kPowerIterationCap) {
  if (g.order() < 1) throw precondition_error("spectral_radius: empty graph");
  if (!(tol > Scalar(0))) throw precondition_error("spectral_radius: tolerance must be positive");
  const auto parts = components(g);
  if (parts.size() == 1) return detail::power_iterate<Scalar>(g, tol, cap).first;
  SpectralEstimate<Scalar> best{};
  for (const auto& part : parts) {
    if (part.size() == 1) continue;
    const auto est = detail::power_iterate<Scalar>(induced(g, part).graph, tol, cap).first;
    if (est.value > best.value) best = est;
    best.iterations = std::max(best.iterations, est.iterations);
  }
  return best;
}

/// Positive unit eigenvector for the spectral radius of a connected graph.
template <typename Scalar = double>
Vector<Scalar> perron_vector(const Graph& g, Scalar tol = Scalar(kEigenTolerance), int cap = kPowerIterationCap) {
  if (g.order() < 1) throw precondition_error("perron_vector: empty graph");
  if (!is_connected(g)) throw precondition_error("perron_vector: graph is disconnected");
  return detail::power_iterate<Scalar>(g, tol, cap).second;
}

/// Dense symmetric eigensolve; O(n^3) reference route.
template <typename Scalar = double>
Scalar dense_spectral_radius(const Graph& g) {
  if (g.order() < 1) throw precondition_error("dense_spectral_radius: empty graph");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(adjacency_matrix<Scalar>(g), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

/// Thrown by quotient_matrix when neighbor counts differ inside a class.
class not_equitable_error : public error {
 public:
  not_equitable_error(int from_class, int to_class, int vertex_a, int count_a, int vertex_b, int count_b)
      : error("partition not equitable: class " + std::to_string(from_class) + " -> class " +
              std::to_string(to_class) + ": vertex " + std::to_string(vertex_a) + " has " + std::to_string(count_a) +
              " neighbors, vertex " + std::to_string(vertex_b) + " has " + std::to_string(count_b)),
        from_class_(from_class),
        to_class_(to_class),
        vertex_a_(vertex_a),
        vertex_b_(vertex_b) {}

  int from_class() const noexcept { return from_class_; }
  int to_class() const noexcept { return to_class_; }
  int vertex_a() const noexcept { return vertex_a_; }
  int vertex_b() const noexcept { return vertex_b_; }

 private:
  int from_class_, to_class_, vertex_a_, vertex_b_;
};

/// Quotient of an equitable partition: entry (i, j) is the number of
/// neighbors in class j of any vertex of class i.
template <typename Scalar = double>
class QuotientMatrix {
 public:
  QuotientMatrix(std::vector<long> sizes, Matrix<Scalar> entries, std::vector<VertexSet> classes = {})
      : sizes_(std::move(sizes)), entries_(std::move(entries)), classes_(std::move(classes)) {
    const auto k = static_cast<Eigen::Index>(sizes_.size());
    if (entries_.rows() != k || entries_.cols() != k) throw precondition_error("QuotientMatrix: shape mismatch");
    for (Eigen::Index i = 0; i < k; ++i) {
      if (sizes_[static_cast<std::size_t>(i)] <= 0) throw precondition_error("QuotientMatrix: empty class");
      for (Eigen::Index j = 0; j < k; ++j) {
        const Scalar limit = Scalar(sizes_[static_cast<std::size_t>(j)] - (i == j ? 1 : 0));
        if (entries_(i, j) < Scalar(0) || entries_(i, j) > limit) {
          throw precondition_error("QuotientMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") outside [0, class size]");
        }
        // edges counted from either side must agree
        if (Scalar(sizes_[static_cast<std::size_t>(i)]) * entries_(i, j) !=
            Scalar(sizes_[static_cast<std::size_t>(j)]) * entries_(j, i)) {
          throw precondition_error("QuotientMatrix: inconsistent edge counts between classes " + std::to_string(i) +
                                   " and " + std::to_string(j));
        }
      }
    }
  }

  int dimension() const noexcept { return static_cast<int>(sizes_.size()); }
  const std::vector<long>& sizes() const noexcept { return sizes_; }
  const Matrix<Scalar>& entries() const noexcept { return entries_; }
  /// Vertex classes when built from a graph; empty for closed-form quotients.
  const std::vector<VertexSet>& classes() const noexcept { return classes_; }
  Scalar operator()(int i, int j) const { return entries_(i, j); }

  /// D^{1/2} Q D^{-1/2} with D = diag(sizes): symmetric and similar to Q.
  Matrix<Scalar> symmetrized() const {
    using std::sqrt;
    Matrix<Scalar> s = entries_;
    for (int i = 0; i < dimension(); ++i) {
      for (int j = 0; j < dimension(); ++j) {
        s(i, j) *= sqrt(Scalar(sizes_[static_cast<std::size_t>(i)]) / Scalar(sizes_[static_cast<std::size_t>(j)]));
      }
    }
    return (s + s.transpose()) / Scalar(2);
  }

  template <typename Other>
  QuotientMatrix<Other> cast() const {
    return QuotientMatrix<Other>(sizes_, entries_.template cast<Other>(), classes_);
  }

 private:
  std::vector<long> sizes_;
  Matrix<Scalar> entries_;
  std::vector<VertexSet> classes_;
};

/// Builds and validates the quotient of `classes` (a disjoint cover of V(g)).
template <typename Scalar = double>
QuotientMatrix<Scalar> quotient_matrix(const Graph& g, std::span<const VertexSet> classes) {
  const int n = g.order();
  const int k = static_cast<int>(classes.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < k; ++c) {
    if (classes[static_cast<std::size_t>(c)].empty()) throw precondition_error("quotient_matrix: empty class");
    classes[static_cast<std::size_t>(c)].for_each([&](int v) {
      if (v >= n) throw precondition_error("quotient_matrix: vertex out of range");
      if (owner[static_cast<std::size_t>(v)] != -1) {
        throw precondition_error("quotient_matrix: vertex " + std::to_string(v) + " in two classes");
      }
      owner[static_cast<std::size_t>(v)] = c;
    });
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0) {
      throw precondition_error("quotient_matrix: vertex " + std::to_string(v) + " not covered");
    }
  }
  Matrix<Scalar> q = Matrix<Scalar>::Zero(k, k);
  std::vector<long> sizes(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& cls = classes[static_cast<std::size_t>(i)];
    sizes[static_cast<std::size_t>(i)] = cls.size();
    std::vector<int> first_counts;
    int first_vertex = -1;
    cls.for_each([&](int v) {
      std::vector<int> counts(static_cast<std::size_t>(k), 0);
      g.neighbors(v).for_each([&](int w) { ++counts[static_cast<std::size_t>(owner[static_cast<std::size_t>(w)])]; });
      if (first_vertex < 0) {
        first_vertex = v;
        first_counts = counts;
        return;
      }
      for (int j = 0; j < k; ++j) {
        if (counts[static_cast<std::size_t>(j)] != first_counts[static_cast<std::size_t>(j)]) {
          throw not_equitable_error(i, j, first_vertex, first_counts[static_cast<std::size_t>(j)], v,
                                    counts[static_cast<std::size_t>(j)]);
        }
      }
    });
    for (int j = 0; j < k; ++j) q(i, j) = Scalar(first_counts[static_cast<std::size_t>(j)]);
  }
  return QuotientMatrix<Scalar>(std::move(sizes), std::move(q),
                                std::vector<VertexSet>(classes.begin(), classes.end()));
}

/// Coefficients c_0..c_k of det(lambda I - m) = sum c_i lambda^i (Faddeev-LeVerrier).
template <typename Scalar>
std::vector<Scalar> characteristic_polynomial(const Matrix<Scalar>& m) {
  const auto k = m.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(k + 1), Scalar(0));
  c[static_cast<std::size_t>(k)] = Scalar(1);
  Matrix<Scalar> aux = Matrix<Scalar>::Zero(k, k);
  for (Eigen::Index step = 1; step <= k; ++step) {
    aux = m * aux + c[static_cast<std::size_t>(k - step + 1)] * Matrix<Scalar>::Identity(k, k);
    c[static_cast<std::size_t>(k - step)] = -(m * aux).trace() / Scalar(step);
  }
  return c;
}

namespace detail {

template <typename Scalar>
std::pair<Scalar, Scalar> evaluate_with_derivative(const std::vector<Scalar>& c, Scalar x) {
  Scalar p(0), dp(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp};
}

}  // namespace detail

/// Largest eigenvalue of a symmetrizable quotient via its symmetric similar form.
template <typename Scalar>
Scalar dense_quotient_spectral_radius(const QuotientMatrix<Scalar>& q) {
  if (q.dimension() == 0) return Scalar(0);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(q.symmetrized(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

/// Spectral radius of an equitable quotient (equal to that of the graph).
///
/// For k <= 4 the largest root of the characteristic polynomial is located by
/// Newton descent from the max row sum (monotone, since all roots are real)
/// and then polished by bisection on a sign-change bracket. Larger quotients go
/// through the symmetric dense solver.
template <typename Scalar = double>
Scalar quotient_spectral_radius(const QuotientMatrix<Scalar>& q) {
  using std::abs;
  const int k = q.dimension();
  if (k == 0) return Scalar(0);
  if (k > 4) return dense_quotient_spectral_radius(q);
  const auto& m = q.entries();
  const Scalar lo = m.rowwise().sum().minCoeff();
  const Scalar hi = m.rowwise().sum().maxCoeff();
  if (lo == hi) return hi;
  const auto coeffs = characteristic_polynomial<Scalar>(m);
  const Scalar eps = Eigen::NumTraits<Scalar>::epsilon();

  Scalar x = hi;
  for (int it = 0; it < 500; ++it) {
    const auto [p, dp] = detail::evaluate_with_derivative(coeffs, x);
    if (p <= Scalar(0) || dp <= Scalar(0)) break;
    const Scalar step = p / dp;
    x -= step;
    if (step <= Scalar(4) * eps * std::max(Scalar(1), abs(x))) break;
  }
  x = std::max(x, lo);

  // bisection on the isolated bracket around the Perron root
  Scalar width = Scalar(1e3) * eps * std::max(Scalar(1), abs(x));
  Scalar a = x - width, b = x + width;
  auto p_at = [&](Scalar t) { return detail::evaluate_with_derivative(coeffs, t).first; };
  if (!(p_at(a) < Scalar(0) && p_at(b) > Scalar(0))) return x;
  for (int it = 0; it < 200 && b - a > eps * std::max(Scalar(1), abs(x)); ++it) {
    const Scalar mid = (a + b) / Scalar(2);
    (p_at(mid) > Scalar(0) ? b : a) = mid;
  }
  return (a + b) / Scalar(2);
}

/// Upper bound (delta-1)/2 + sqrt(2e - delta n + (delta+1)^2/4) on the spectral
/// radius of a graph with e edges, order n and minimum degree delta.
double hsf_bound(long edges, int order, int min_degree);

enum class SpectralOrder { less, greater, tie_within_tol };

struct SpectralComparison {
  SpectralOrder order;
  SpectralEstimate<double> first;
  SpectralEstimate<double> second;
};

SpectralComparison compare_spectral(const Graph& g1, const Graph& g2, double tol = kCompareTolerance,
                                    double eig_tol = kEigenTolerance);

}  // namespace specfactor
