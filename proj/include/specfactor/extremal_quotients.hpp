#pragma once

// Template definitions for the closed-form quotients declared in extremal.hpp.

#include <map>

namespace specfactor {

namespace detail {

// Distinct part sizes, largest first, with multiplicities.
inline std::vector<std::pair<int, int>> group_parts(std::span<const int> parts) {
  std::map<int, int, std::greater<>> counts;
  for (int p : parts) {
    if (p < 1) throw precondition_error("part sizes must be positive");
    ++counts[p];
  }
  return {counts.begin(), counts.end()};
}

}  // namespace detail

template <typename Scalar>
QuotientMatrix<Scalar> factor_extremal_quotient(int n, int a) {
  if (a < 1 || n < a + 1) throw precondition_error("factor_extremal_quotient: need a >= 1, n >= a + 1");
  if (a == 1) {
    Matrix<Scalar> q(2, 2);
    q << Scalar(n - 2), 0, 0, 0;
    return QuotientMatrix<Scalar>({n - 1, 1}, q);
  }
  Matrix<Scalar> q(3, 3);
  q << Scalar(a - 2), Scalar(n - a), 1,  //
      Scalar(a - 1), Scalar(n - a - 1), 0,  //
      Scalar(a - 1), 0, 0;
  return QuotientMatrix<Scalar>({a - 1, n - a, 1}, q);
}

template <typename Scalar>
QuotientMatrix<Scalar> g_double_prime_quotient(int n, int s, int r) {
  const int m = n - 2 * s - r - 1;
  if (s < 1 || r < 0 || m < 1) throw precondition_error("g_double_prime_quotient: need s >= 1, n >= 2s + r + 2");
  if (r == 0) {
    Matrix<Scalar> q(3, 3);
    q << Scalar(s - 1), Scalar(s + 1), Scalar(m),  //
        Scalar(s), 0, 0,                           //
        Scalar(s), 0, Scalar(m - 1);
    return QuotientMatrix<Scalar>({s, s + 1, m}, q);
  }
  Matrix<Scalar> q(4, 4);
  q << Scalar(s - 1), Scalar(s + 1), Scalar(r), Scalar(m),  //
      Scalar(s), 0, Scalar(r), 0,                           //
      Scalar(s), Scalar(s + 1), 0, Scalar(m),               //
      Scalar(s), 0, Scalar(r), Scalar(m - 1);
  return QuotientMatrix<Scalar>({s, s + 1, r, m}, q);
}

template <typename Scalar>
QuotientMatrix<Scalar> g_triple_prime_quotient(int n, int s, int r, int delta) {
  const int p = delta - s - r + 1;
  const int big = n - s - r - (s + 1) * p;
  if (s < 0 || r < 1 || p < 1 || big < 1) {
    throw precondition_error("g_triple_prime_quotient: need s >= 0, r >= 1, delta - s - r + 1 >= 1, positive remainder");
  }
  const Scalar parts = Scalar((s + 1) * p);
  if (s == 0) {
    Matrix<Scalar> q(3, 3);
    q << Scalar(p - 1), Scalar(r), 0,  //
        parts, 0, Scalar(big),         //
        0, Scalar(r), Scalar(big - 1);
    return QuotientMatrix<Scalar>({(s + 1) * p, r, big}, q);
  }
  Matrix<Scalar> q(4, 4);
  q << Scalar(s - 1), parts, Scalar(r), Scalar(big),  //
      Scalar(s), Scalar(p - 1), Scalar(r), 0,         //
      Scalar(s), parts, 0, Scalar(big),               //
      Scalar(s), 0, Scalar(r), Scalar(big - 1);
  return QuotientMatrix<Scalar>({s, (s + 1) * p, r, big}, q);
}

template <typename Scalar>
QuotientMatrix<Scalar> clique_join_quotient(int s, std::span<const int> parts) {
  if (s < 0) throw precondition_error("clique_join_quotient: negative clique");
  const auto groups = detail::group_parts(parts);
  const int offset = s > 0 ? 1 : 0;
  const int k = offset + static_cast<int>(groups.size());
  Matrix<Scalar> q = Matrix<Scalar>::Zero(k, k);
  std::vector<long> sizes;
  if (s > 0) {
    sizes.push_back(s);
    q(0, 0) = Scalar(s - 1);
  }
  for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
    const auto [size, count] = groups[static_cast<std::size_t>(g)];
    sizes.push_back(static_cast<long>(size) * count);
    q(offset + g, offset + g) = Scalar(size - 1);
    if (s > 0) {
      q(0, offset + g) = Scalar(static_cast<long>(size) * count);
      q(offset + g, 0) = Scalar(s);
    }
  }
  return QuotientMatrix<Scalar>(std::move(sizes), std::move(q));
}

}  // namespace specfactor
