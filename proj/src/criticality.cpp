#include "specfactor/criticality.hpp"

#include <bit>
#include <cstdint>

#include "specfactor/errors.hpp"
#include "specfactor/extremal.hpp"
#include "specfactor/factor.hpp"

namespace specfactor {

namespace {

void require_limit(const Graph& g, int limit, const char* what) {
  const int cap = std::min(limit, 30);
  if (g.order() > cap) throw limit_exceeded(what, g.order(), cap);
}

std::vector<std::uint32_t> masks_of(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbor_mask(v));
  return adj;
}

int odd_components_in(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
  int odd = 0;
  while (alive != 0) {
    std::uint32_t comp = alive & (~alive + 1);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj[static_cast<std::size_t>(v)] & alive & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    odd += std::popcount(comp) & 1;
    alive &= ~comp;
  }
  return odd;
}

}  // namespace

std::string WitnessCheck::failures() const {
  std::string out;
  auto note = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  note(independent, "independent");
  note(parity, "parity");
  note(disjoint, "disjoint");
  note(count_matches, "count_matches");
  note(exceeds_barrier, "exceeds_barrier");
  return out;
}

WitnessCheck check_witness(const Graph& g, const CriticalityWitness& w) {
  WitnessCheck out;
  const int n = g.order();
  if (w.independent.universe() != n || w.barrier.universe() != n) return out;
  out.independent = is_independent(g, w.independent);
  out.parity = w.independent.size() % 2 == n % 2;
  out.disjoint = !w.independent.intersects(w.barrier);
  out.count_matches = odd_components(g, w.independent | w.barrier) == w.odd_count;
  out.exceeds_barrier = w.odd_count > w.barrier.size();
  return out;
}

DefinitionDecision is_id_factor_critical_def(const Graph& g, int limit) {
  require_limit(g, limit, "is_id_factor_critical_def");
  DefinitionDecision out{true, std::nullopt};
  const int n = g.order();
  for_each_independent_set(g, n % 2, [&](const VertexSet& i) {
    const Graph rest = remove_vertices(g, i).graph;
    if (2 * static_cast<int>(maximum_matching(rest).size()) == rest.order()) return true;
    out.critical = false;
    out.failing_set = i;
    return false;
  });
  return out;
}

TutteDecision is_id_factor_critical_tutte(const Graph& g, int limit) {
  require_limit(g, limit, "is_id_factor_critical_tutte");
  const int n = g.order();
  const auto adj = masks_of(g);
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  TutteDecision out{true, std::nullopt};
  for_each_independent_set(g, n % 2, [&](const VertexSet& i) {
    const auto imask = static_cast<std::uint32_t>(i.mask());
    const std::uint32_t rest = all & ~imask;
    const int room = n - i.size();
    std::uint32_t s = 0;
    do {
      const int size = std::popcount(s);
      // o(G-I-S) <= n - |I| - |S|, so larger S can never win
      if (2 * size + 1 <= room) {
        const int odd = odd_components_in(adj, rest & ~s);
        if (odd > size) {
          out.critical = false;
          out.witness = CriticalityWitness{i, VertexSet::from_mask(n, s), odd};
          return false;
        }
      }
      s = (s - rest) & rest;
    } while (s != 0);
    return true;
  });
  return out;
}

StructuredWitness structured_witness(int n, int delta, int r) {
  if (delta < 1 || r < 1 || n < 2 * delta + r + 2) {
    throw precondition_error("structured_witness: need delta >= 1, r >= 1, n >= 2 delta + r + 2");
  }
  const StructuredGraph g = build_id_extremal(n, delta, r);
  const int m = n - 2 * delta - r - 1;
  StructuredWitness out;
  // G - I_r - K_delta is the isolated I_{delta+1} vertices plus the clique K_m
  out.witness = CriticalityWitness{g.cls("I_r"), g.cls("K_s"), delta + 1 + m % 2};
  out.parity_matches = r % 2 == n % 2;
  out.check = check_witness(g.graph, out.witness);
  return out;
}

}  // namespace specfactor
