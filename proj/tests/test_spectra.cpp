#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "specfactor/extremal.hpp"
#include "specfactor/isomorphism.hpp"
#include "specfactor/spectra.hpp"
#include "support.hpp"

using namespace specfactor;

namespace {

std::vector<VertexSet> classes_from_colors(const std::vector<int>& colors) {
  const int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<VertexSet> out(static_cast<std::size_t>(k), VertexSet(static_cast<int>(colors.size())));
  for (std::size_t v = 0; v < colors.size(); ++v) out[static_cast<std::size_t>(colors[v])].insert(static_cast<int>(v));
  return out;
}

}  // namespace

TEST_CASE("spectral radius examples") {
  CHECK(spectral_radius(complete(5)).value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(spectral_radius(disjoint_union(complete(4), complete(1))).value == doctest::Approx(3.0).epsilon(1e-12));
  const Graph extremal = join(complete(1), disjoint_union(complete(3), complete(1)));
  CHECK(spectral_radius(extremal).value == doctest::Approx(3.086130197651494).epsilon(1e-10));
  CHECK(dense_spectral_radius(extremal) == doctest::Approx(3.086130197651494).epsilon(1e-12));
  CHECK(spectral_radius(empty(4)).value == 0.0);
  CHECK_THROWS_AS(spectral_radius(Graph(0)), precondition_error);
  CHECK_THROWS_AS(spectral_radius(complete(3), 0.0), precondition_error);
  // a complete bipartite graph needs the shift, plain iteration would oscillate
  const Graph k33 = join(empty(3), empty(3));
  CHECK(spectral_radius(k33).value == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("residual is reported") {
  const auto est = spectral_radius(cycle(9));
  CHECK(est.residual <= kEigenTolerance);
  CHECK(est.iterations >= 1);
  CHECK_THROWS_AS(spectral_radius(path(60), 1e-14, 3), convergence_error);
}

TEST_CASE("power iteration agrees with the dense solver on the corpus") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : testing::corpus(n)) {
      REQUIRE(spectral_radius(e.graph).value == doctest::Approx(dense_spectral_radius(e.graph)).epsilon(1e-8));
    }
  }
}

TEST_CASE("long double iteration") {
  const auto est = spectral_radius<long double>(complete(7), 1e-15L);
  CHECK(std::fabs(static_cast<double>(est.value) - 6.0) < 1e-13);
}

TEST_CASE("Perron vectors") {
  const auto x = perron_vector(complete(4));
  for (int i = 0; i < 4; ++i) CHECK(x(i) == doctest::Approx(0.5).epsilon(1e-9));

  const Graph star = join(complete(1), empty(4));
  const auto y = perron_vector(star);
  for (int i = 2; i < 5; ++i) CHECK(y(i) == doctest::Approx(y(1)).epsilon(1e-9));
  CHECK(y(0) > y(1));
  CHECK(2.0 * y(1) == doctest::Approx(y(0)).epsilon(1e-8));

  CHECK_THROWS_AS(perron_vector(disjoint_union(complete(2), complete(2))), precondition_error);
}

TEST_CASE("Perron entries of G'' at (30, 5, 1) cluster by class") {
  const StructuredGraph g2 = build_g_double_prime(30, 5, 1);
  const auto x = perron_vector(g2.graph, 1e-13);
  std::vector<double> per_class;
  for (const auto& cls : g2.classes) {
    const int first = cls.first();
    cls.for_each([&](int v) { REQUIRE(x(v) == doctest::Approx(x(first)).epsilon(1e-9)); });
    per_class.push_back(x(first));
  }
  // with r = 1 the single I_r vertex is universal, so it shares its entry with K_s
  CHECK(per_class[0] == doctest::Approx(per_class[2]).epsilon(1e-9));
  std::vector<double> distinct;
  for (double v : per_class) {
    if (std::none_of(distinct.begin(), distinct.end(), [&](double d) { return std::fabs(d - v) < 1e-9; })) {
      distinct.push_back(v);
    }
  }
  CHECK(distinct.size() == 3);
  // at r = 2 the I_r vertices are no longer adjacent to each other and all four separate
  const StructuredGraph r2 = build_g_double_prime(30, 5, 2);
  const auto z = perron_vector(r2.graph, 1e-13);
  std::set<long> rounded;
  for (const auto& cls : r2.classes) rounded.insert(std::lround(z(cls.first()) * 1e9));
  CHECK(rounded.size() == 4);
}

TEST_CASE("quotient matrix rows") {
  for (int n = 4; n <= 9; ++n) {
    for (int a = 2; a < n; ++a) {
      const StructuredGraph g = build_factor_extremal(n, a);
      const auto q = g.quotient();
      Matrix<double> expected(3, 3);
      expected << a - 2, n - a, 1, a - 1, n - a - 1, 0, a - 1, 0, 0;
      REQUIRE(q.entries() == expected);
      REQUIRE(quotient_spectral_radius(q) == doctest::Approx(dense_spectral_radius(g.graph)).epsilon(1e-10));
    }
  }
  const StructuredGraph g2 = build_g_double_prime(30, 5, 1);
  const auto q2 = g2.quotient();
  CHECK(q2.sizes() == std::vector<long>{5, 6, 1, 18});
  CHECK(q2(1, 0) == 5);
  CHECK(q2(1, 1) == 0);
  CHECK(q2(1, 2) == 1);
  CHECK(q2(1, 3) == 0);

  const int n = 40, s = 2, r = 1, delta = 6;
  const auto q3 = build_g_triple_prime(n, s, r, delta).quotient();
  CHECK(q3(1, 0) == s);
  CHECK(q3(1, 1) == delta - s - r);
  CHECK(q3(1, 2) == r);
  CHECK(q3(1, 3) == 0);
}

TEST_CASE("quotient of a non-equitable partition is rejected") {
  const std::vector<VertexSet> classes{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
  try {
    quotient_matrix(path(4), classes);
    FAIL("expected not_equitable_error");
  } catch (const not_equitable_error& e) {
    CHECK(e.from_class() == 0);
  }
  const std::vector<VertexSet> overlap{VertexSet(3, {0, 1}), VertexSet(3, {1, 2})};
  CHECK_THROWS_AS(quotient_matrix(complete(3), overlap), precondition_error);
  const std::vector<VertexSet> partial{VertexSet(3, {0, 1})};
  CHECK_THROWS_AS(quotient_matrix(complete(3), partial), precondition_error);
}

TEST_CASE("quotient spectral radius examples") {
  const std::vector<VertexSet> one{VertexSet::full(6)};
  CHECK(quotient_spectral_radius(quotient_matrix(complete(6), one)) == 5.0);
  const Graph g = disjoint_union(complete(5), complete(1));
  const std::vector<VertexSet> two{VertexSet(6, {0, 1, 2, 3, 4}), VertexSet(6, {5})};
  CHECK(quotient_spectral_radius(quotient_matrix(g, two)) == doctest::Approx(4.0).epsilon(1e-14));
  const auto q = build_factor_extremal(5, 2).quotient();
  CHECK(std::fabs(quotient_spectral_radius(q) - spectral_radius(build_factor_extremal(5, 2).graph).value) < 1e-9);
}

TEST_CASE("closed-form quotient roots match the frozen values") {
  CHECK(quotient_spectral_radius(g_double_prime_quotient(30, 5, 1)) == doctest::Approx(23.40363731277747).epsilon(1e-12));
  CHECK(quotient_spectral_radius(g_double_prime_quotient(89, 5, 1)) == doctest::Approx(82.03188068909478).epsilon(1e-12));
  CHECK(quotient_spectral_radius(g_double_prime_quotient(89, 4, 1)) == doctest::Approx(83.01798560136922).epsilon(1e-12));
  CHECK(quotient_spectral_radius(g_triple_prime_quotient(93, 3, 1, 4)) == doctest::Approx(88.0081868137433).epsilon(1e-12));
  CHECK(quotient_spectral_radius(g_triple_prime_quotient(120, 0, 1, 4)) == doctest::Approx(115.00030797492876).epsilon(1e-12));
  const std::vector<int> p53{5, 3}, p71{7, 1};
  CHECK(quotient_spectral_radius(clique_join_quotient(2, p53)) == doctest::Approx(6.443257366366325).epsilon(1e-12));
  CHECK(quotient_spectral_radius(clique_join_quotient(2, p71)) == doctest::Approx(8.056368638500844).epsilon(1e-12));
  const long double wide = quotient_spectral_radius(g_double_prime_quotient<long double>(89, 5, 1));
  CHECK(std::fabs(static_cast<double>(wide) - 82.03188068909478) < 1e-12);
}

TEST_CASE("characteristic polynomial") {
  Matrix<double> m(2, 2);
  m << 1, 2, 3, 4;
  const auto c = characteristic_polynomial<double>(m);
  REQUIRE(c.size() == 3);
  CHECK(c[2] == 1.0);
  CHECK(c[1] == doctest::Approx(-5.0));
  CHECK(c[0] == doctest::Approx(-2.0));
}

TEST_CASE("quotient of the coarsest equitable partition agrees with the graph") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& e : testing::corpus(n)) {
      const auto classes = classes_from_colors(refine_degree_partition(e.graph));
      const auto q = quotient_matrix(e.graph, classes);
      const auto parts = components(e.graph);
      if (parts.size() > 1) continue;  // the quotient only sees the Perron root of a connected graph
      REQUIRE(quotient_spectral_radius(q) == doctest::Approx(dense_spectral_radius(e.graph)).epsilon(1e-9));
      REQUIRE(dense_quotient_spectral_radius(q) == doctest::Approx(dense_spectral_radius(e.graph)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Hong-Shu-Fang bound") {
  for (int n = 2; n <= 30; ++n) CHECK(hsf_bound(static_cast<long>(n) * (n - 1) / 2, n, n - 1) == doctest::Approx(n - 1.0).epsilon(1e-14));
  CHECK(hsf_bound(7, 5, 1) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hsf_bound(1, 5, 3), precondition_error);
}

TEST_CASE("spectral comparison") {
  CHECK(compare_spectral(complete(5), complete(4)).order == SpectralOrder::greater);
  CHECK(compare_spectral(complete(4), complete(5)).order == SpectralOrder::less);
  std::mt19937_64 rng(2);
  const Graph g = testing::random_graph(rng, 15, 0.4);
  CHECK(compare_spectral(g, permute(g, testing::random_permutation(rng, 15))).order == SpectralOrder::tie_within_tol);
  CHECK(compare_spectral(remove_edge(cycle(8), Edge(0, 1)), cycle(8)).order == SpectralOrder::less);
}

TEST_CASE("entrywise domination orders spectral radii") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> order(2, 14);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph b = testing::random_graph(rng, order(rng), density(rng));
    const auto edges = b.edges();
    if (edges.empty()) continue;
    Graph a = b;
    std::bernoulli_distribution drop(0.3);
    bool changed = false;
    for (const Edge& e : edges) {
      if (drop(rng)) {
        a = remove_edge(a, e);
        changed = true;
      }
    }
    const double la = dense_spectral_radius(a), lb = dense_spectral_radius(b);
    REQUIRE(la <= lb + 1e-9);
    // strict when the larger matrix is irreducible
    if (changed && is_connected(b)) REQUIRE(la < lb - 1e-9);
  }
  // random nonnegative symmetric matrices, not only 0/1 ones
  for (int trial = 0; trial < 200; ++trial) {
    const int n = order(rng);
    Matrix<double> m = Matrix<double>::Zero(n, n), big = Matrix<double>::Zero(n, n);
    std::uniform_real_distribution<double> w(0.0, 2.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        m(i, j) = m(j, i) = w(rng);
        big(i, j) = big(j, i) = m(i, j) + w(rng) * 0.5;
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix<double>> sm(m, Eigen::EigenvaluesOnly), sb(big, Eigen::EigenvaluesOnly);
    REQUIRE(sm.eigenvalues().maxCoeff() <= sb.eigenvalues().maxCoeff() + 1e-12);
  }
}
