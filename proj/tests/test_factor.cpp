#include <random>

#include "doctest.h"
#include "specfactor/extremal.hpp"
#include "specfactor/factor.hpp"
#include "support.hpp"

using namespace specfactor;

namespace {

const std::vector<std::pair<int, int>> kPairs{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};

bool is_matching_of(const Graph& g, const std::vector<Edge>& m) {
  VertexSet used(g.order());
  for (const Edge& e : m) {
    if (!g.adjacent(e.u, e.v) || used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

}  // namespace

TEST_CASE("deficiency examples") {
  for (int n = 3; n <= 7; ++n) {
    const Deficiency d = deficiency(complete(n), 2, 3, VertexSet(n));
    CHECK(d.t.empty());
    CHECK(d.phi == 0);
  }
  const StructuredGraph extremal = build_factor_extremal(5, 2);
  const Deficiency d = deficiency(extremal.graph, 2, 3, VertexSet(5));
  CHECK(d.t == extremal.cls("K_1"));
  CHECK(d.phi == -1);
  const Deficiency k4 = deficiency(complete(4), 2, 2, VertexSet(4, {0}));
  CHECK(k4.t.empty());
  CHECK(k4.phi == 2);
}

TEST_CASE("bounds validation") {
  CHECK_THROWS_AS(DegreeBounds::uniform(3, 2, 1), precondition_error);
  CHECK_THROWS_AS(DegreeBounds::uniform(3, -1, 1), precondition_error);
  DegreeBounds b = DegreeBounds::uniform(3, 1, 1);
  CHECK_THROWS_AS(b.validate(4), precondition_error);
  // g(v) = 0 is allowed
  DegreeBounds zero{{0, 0, 0}, {1, 1, 1}};
  CHECK(fractional_factor_lp(empty(3), zero).has_factor);
  CHECK(fractional_factor_oracle(empty(3), zero).has_factor);
}

TEST_CASE("oracle examples") {
  for (int n = 3; n <= 9; ++n) {
    for (auto [a, b] : kPairs) {
      if (n < a + 1 || (a == b && n * a % 2 == 1)) continue;
      REQUIRE(fractional_factor_oracle(complete(n), DegreeBounds::uniform(n, a, b)).has_factor);
    }
  }
  for (int n = 2; n <= 9; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a; b <= a + 2; ++b) {
        const auto d = fractional_factor_oracle(build_factor_extremal(n, a).graph, DegreeBounds::uniform(n, a, b));
        REQUIRE_FALSE(d.has_factor);
        REQUIRE(d.witness);
        REQUIRE(d.witness->phi <= -1);
      }
    }
  }
  CHECK(fractional_factor_oracle(complete(3), DegreeBounds::uniform(3, 1, 1)).has_factor);
  CHECK_THROWS_AS(fractional_factor_oracle(complete(21), DegreeBounds::uniform(21, 1, 1)), limit_exceeded);
}

TEST_CASE("flow route examples") {
  const LpDecision c3 = fractional_factor_lp(complete(3), DegreeBounds::uniform(3, 1, 1));
  REQUIRE(c3.has_factor);
  REQUIRE(c3.certificate->edges.size() == 3);
  for (const auto& e : c3.certificate->edges) CHECK(e.weight == doctest::Approx(0.5));

  const Graph extremal = build_factor_extremal(5, 2).graph;
  CHECK_FALSE(fractional_factor_lp(extremal, DegreeBounds::uniform(5, 2, 3)).has_factor);
  // orders far past the oracle limit
  CHECK_FALSE(fractional_factor_lp(build_factor_extremal(300, 7).graph, DegreeBounds::uniform(300, 7, 9)).has_factor);
  const LpDecision big = fractional_factor_lp(complete(200), DegreeBounds::uniform(200, 3, 3));
  REQUIRE(big.has_factor);
  CHECK(validate_certificate(complete(200), DegreeBounds::uniform(200, 3, 3), *big.certificate));
}

TEST_CASE("certificate validation rejects bad weights") {
  const Graph g = complete(3);
  const DegreeBounds bounds = DegreeBounds::uniform(3, 1, 1);
  FactorCertificate ok{{{0, 1, 0.5}, {0, 2, 0.5}, {1, 2, 0.5}}};
  CHECK(validate_certificate(g, bounds, ok));
  FactorCertificate heavy{{{0, 1, 1.0}, {0, 2, 0.5}, {1, 2, 0.5}}};
  CHECK_FALSE(validate_certificate(g, bounds, heavy));
  FactorCertificate off_graph{{{0, 1, 1.0}}};
  CHECK_FALSE(validate_certificate(path(3), bounds, FactorCertificate{{{0, 2, 0.5}}}));
  CHECK_FALSE(validate_certificate(g, bounds, off_graph));
}

TEST_CASE("flow route and subset oracle agree on every graph up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& e : testing::corpus(n)) {
      for (auto [a, b] : kPairs) {
        const DegreeBounds bounds = DegreeBounds::uniform(n, a, b);
        const LpDecision lp = fractional_factor_lp(e.graph, bounds);
        const OracleDecision oracle = fractional_factor_oracle(e.graph, bounds);
        REQUIRE(lp.has_factor == oracle.has_factor);
        if (lp.has_factor) REQUIRE(validate_certificate(e.graph, bounds, *lp.certificate));
      }
    }
  }
}

TEST_CASE("fractional factor counts") {
  // graphs with a fractional [a,b]-factor, from an independent linear program
  const std::map<std::pair<int, int>, std::vector<int>> expected{
      {{1, 1}, {6, 13, 102}}, {{1, 2}, {6, 22, 118}}, {{2, 2}, {3, 8, 52}}, {{2, 3}, {3, 10, 58}}, {{3, 3}, {1, 2, 16}}};
  for (int n = 4; n <= 6; ++n) {
    const auto graphs = testing::corpus(n);
    for (auto [a, b] : kPairs) {
      int count = 0;
      for (const auto& e : graphs) count += fractional_factor_lp(e.graph, DegreeBounds::uniform(n, a, b)).has_factor;
      CHECK(count == expected.at({a, b})[static_cast<std::size_t>(n - 4)]);
    }
  }
}

TEST_CASE("oracle witnesses re-validate") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = testing::random_graph(rng, n, 0.35);
    const DegreeBounds bounds = DegreeBounds::uniform(n, 1 + trial % 3, 1 + trial % 3 + trial % 2);
    const auto d = fractional_factor_oracle(g, bounds);
    if (d.has_factor) continue;
    const Deficiency again = deficiency(g, bounds, d.witness->s);
    REQUIRE(again.t == d.witness->t);
    REQUIRE(again.phi == d.witness->phi);
    REQUIRE(again.phi <= -1);
    REQUIRE_FALSE(d.witness->s.intersects(d.witness->t));
  }
}

TEST_CASE("adding an edge never destroys a fractional factor") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 1000) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph g = testing::random_graph(rng, n, 0.3);
    const auto missing = complement(g).edges();
    if (missing.empty()) continue;
    const Edge e = missing[rng() % missing.size()];
    const int a = 1 + static_cast<int>(rng() % 3);
    const DegreeBounds bounds = DegreeBounds::uniform(n, a, a + static_cast<int>(rng() % 2));
    if (fractional_factor_lp(g, bounds).has_factor) REQUIRE(fractional_factor_lp(add_edge(g, e), bounds).has_factor);
    ++checked;
  }
}

TEST_CASE("perfect matching examples") {
  const auto k4 = has_perfect_matching(complete(4));
  CHECK(k4.perfect);
  CHECK(k4.matching.size() == 2);
  CHECK(is_matching_of(complete(4), k4.matching));

  const auto star = has_perfect_matching(join(complete(1), empty(3)));
  CHECK_FALSE(star.perfect);
  CHECK(star.tutte_set == VertexSet(4, {0}));
  CHECK(odd_components(join(complete(1), empty(3)), star.tutte_set) == 3);

  const auto odd = has_perfect_matching(complete(5));
  CHECK_FALSE(odd.perfect);
  CHECK(odd.tutte_set.empty());

  // the graph left after deleting I_r from the extremal graph at (n, delta, r) = (13, 4, 1)
  const Graph h = join(complete(4), disjoint_union(complete(3), empty(5)));
  const auto m = has_perfect_matching(h);
  CHECK_FALSE(m.perfect);
  CHECK(m.tutte_set == VertexSet(12, {0, 1, 2, 3}));
  // K_3 is odd as well, so six odd components against a barrier of four
  CHECK(odd_components(h, m.tutte_set) == 6);
}

TEST_CASE("perfect matching counts") {
  const std::map<int, int> expected{{4, 6}, {6, 101}, {8, 10413}};
  for (auto [n, want] : expected) {
    int count = 0;
    for (const auto& e : testing::corpus(n)) {
      const auto m = has_perfect_matching(e.graph);
      REQUIRE(is_matching_of(e.graph, m.matching));
      if (m.perfect) {
        REQUIRE(static_cast<int>(m.matching.size()) * 2 == n);
        ++count;
      } else {
        REQUIRE(odd_components(e.graph, m.tutte_set) > m.tutte_set.size());
      }
    }
    CHECK(count == want);
  }
}

TEST_CASE("blossom search on larger random graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 20 + 2 * static_cast<int>(rng() % 40);
    const Graph g = testing::random_graph(rng, n, 1.5 / n + 0.02 * (trial % 3));
    const auto m = has_perfect_matching(g);
    REQUIRE(is_matching_of(g, m.matching));
    // Tutte-Berge: the deficiency of a maximum matching equals o(G - S) - |S| for a barrier S
    if (!m.perfect) {
      REQUIRE(odd_components(g, m.tutte_set) - m.tutte_set.size() == n - 2 * static_cast<int>(m.matching.size()));
    }
  }
}

TEST_CASE("a perfect matching is a fractional perfect matching") {
  for (int n : {4, 6}) {
    for (const auto& e : testing::corpus(n)) {
      if (has_perfect_matching(e.graph).perfect) {
        REQUIRE(fractional_factor_lp(e.graph, DegreeBounds::uniform(n, 1, 1)).has_factor);
      }
    }
  }
}

TEST_CASE("edge-count sufficiency predicate") {
  CHECK(edge_count_sufficiency(complete(5), 2, 2) == Sufficiency::applicable);
  CHECK(edge_count_sufficiency(remove_edge(complete(5), Edge(0, 1)), 1, 1) == Sufficiency::not_applicable);
  CHECK(edge_count_sufficiency(build_factor_extremal(6, 2).graph, 2, 3) == Sufficiency::not_applicable);
  CHECK(edge_count_sufficiency(complete(3), 3, 3) == Sufficiency::not_applicable);
}
