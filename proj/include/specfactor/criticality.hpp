#pragma once

#include <optional>
#include <string>

#include "specfactor/graph.hpp"

namespace specfactor {

inline constexpr int kCriticalityLimit = 14;

/// Independent set I (|I| = n mod 2) and S within V - I with o(G - I - S) > |S|.
struct CriticalityWitness {
  VertexSet independent;
  VertexSet barrier;
  int odd_count = 0;
};

struct WitnessCheck {
  bool independent = false;
  bool parity = false;
  bool disjoint = false;
  bool count_matches = false;
  bool exceeds_barrier = false;

  bool valid() const { return independent && parity && disjoint && count_matches && exceeds_barrier; }
  /// Names of the failed conditions, comma separated.
  std::string failures() const;
};

/// Recomputes every witness condition from scratch.
WitnessCheck check_witness(const Graph& g, const CriticalityWitness& w);

struct DefinitionDecision {
  bool critical = false;
  /// First independent set (by increasing size) whose removal leaves no perfect matching.
  std::optional<VertexSet> failing_set;
};

/// G - I has a perfect matching for every independent I with |I| = n (mod 2).
DefinitionDecision is_id_factor_critical_def(const Graph& g, int limit = kCriticalityLimit);

struct TutteDecision {
  bool critical = false;
  std::optional<CriticalityWitness> witness;
};

/// Same decision through odd-component counts over all (I, S) pairs.
TutteDecision is_id_factor_critical_tutte(const Graph& g, int limit = kCriticalityLimit);

struct StructuredWitness {
  CriticalityWitness witness;
  /// |I| = r has the parity of n; when false, I is not admissible for the criterion.
  bool parity_matches = false;
  WitnessCheck check;
};

/// Explicit witness for S_{delta+r,delta} v (K_{n-2delta-r-1} + I_{delta+1}):
/// I = the I_r class, S = the K_delta class. Built without enumeration and
/// re-validated by recounting odd components. Requires n >= 2 delta + r + 2.
StructuredWitness structured_witness(int n, int delta, int r);

}  // namespace specfactor
