#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "specfactor/extremal.hpp"
#include "specfactor/graph6.hpp"
#include "specfactor/spectra.hpp"

namespace specfactor::verify {

struct FailureRecord {
  std::string input;  // enough to replay the case through `decide`
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string suite;
  long cases = 0;
  long passes = 0;
  std::vector<FailureRecord> failures;
  long skipped = 0;
  std::map<std::string, long> skip_reasons;
  std::map<std::string, long> counters;
  double wall_time = 0;
  std::vector<VerificationReport> parts;

  void pass() {
    ++cases;
    ++passes;
  }
  void fail(std::string input, std::string expected, std::string observed);
  void skip(const std::string& reason);
  void count(const std::string& key, long delta = 1) { counters[key] += delta; }

  /// Adds counts, failures (appended in order) and counters. Parts are not merged.
  void merge(const VerificationReport& other);
  /// Merges `part` into the totals and keeps it as a named sub-report.
  void add_part(VerificationReport part);

  bool ok() const { return failures.empty(); }
  bool consistent() const { return cases == passes + static_cast<long>(failures.size()) + skipped; }
  nlohmann::json to_json() const;
};

/// Runs per_index(i, report) for i in [0, count) over `jobs` contiguous shards
/// and merges the shard reports in index order, so output does not depend on
/// the number of workers.
template <typename F>
VerificationReport sharded(const std::string& suite, std::size_t count, int jobs, F&& per_index) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(count, 1));
  std::vector<VerificationReport> shards(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) per_index(i, shards[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  VerificationReport out;
  out.suite = suite;
  for (const auto& shard : shards) out.merge(shard);
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Power iteration, falling back to the dense solver if it does not converge.
double robust_spectral_radius(const Graph& g, double tol = kEigenTolerance);

/// Reads every file and records parse errors as skipped cases in `log`.
std::vector<CorpusEntry> load_corpora(const std::vector<std::string>& paths, VerificationReport& log);

using BoundsPair = std::pair<int, int>;
inline const std::vector<BoundsPair> kDefaultPairs{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};

struct Theorem4Options {
  std::vector<BoundsPair> pairs{kDefaultPairs};
  double tol = kCompareTolerance;
  int jobs = 1;
};

/// Counter "boundary[n=..,a=..,b=..]" tallies graphs at or above the bound
/// without a factor that are isomorphic to the extremal graph.
std::string boundary_key(int n, int a, int b);

VerificationReport run_theorem4(std::span<const CorpusEntry> corpus, const Theorem4Options& options);

struct LemmaOptions {
  std::vector<BoundsPair> pairs{kDefaultPairs};
  int prop1_min_n = 2;
  int prop1_max_n = 40;
  int jobs = 1;
};

/// Parts: lemma1 (Hamilton path), lemma2 (edge-count sufficiency),
/// lemma4 (edge bound on rho), proposition1 (monotonicity grid).
VerificationReport run_lemmas(std::span<const CorpusEntry> corpus, const LemmaOptions& options);

struct Theorem8Options {
  std::vector<int> deltas{4, 5, 6, 7};
  std::vector<int> rs{1, 2};
  /// n runs from 2 delta + r + 2 to 2 delta + r + n_span.
  int n_span = 100;
  std::vector<int> analogue_ks{2, 3};
  int analogue_max_n = 12;
  int jobs = 1;
};

/// Parts: lemma11 (structured witnesses), extremal_rho (rho(G*) > n - delta - r - 1),
/// small_analogues (both criticality routes on S_{k+r,k} v (K_m + I_{k+1})).
/// Parity-mismatched cells are tallied in counters, never hidden.
VerificationReport run_theorem8_structure(const Theorem8Options& options);

struct ClaimsOptions {
  std::vector<int> deltas{4, 5};
  int r = 1;
  /// Claim 5: n from 20 delta + r + 8, this many values.
  int claim5_n_count = 51;
  int claim5_s_stride = 1;
  /// Claim 6: n from ceil(cubic threshold), this many values.
  int claim6_n_count = 50;
  /// When set, both claims use every n in [first, second] instead.
  std::optional<std::pair<int, int>> n_range;
  bool explore = false;
  double margin = kCompareTolerance;
  int jobs = 1;
};

struct ClaimRow {
  std::string claim;
  int n = 0, s = 0, r = 0, delta = 0;
  ClaimResult result;
};

std::string claims_csv_header();
std::string claims_csv_row(const ClaimRow& row);

/// Parts: claim5, claim6. Rows are returned in grid order for CSV output.
VerificationReport run_claims(const ClaimsOptions& options, std::vector<ClaimRow>* rows = nullptr);

struct LoadedGraph {
  Graph graph;
  std::string source;
  std::optional<StructuredGraph> structured;
  /// Set for "id-extremal:" inputs: (n, delta, r).
  std::optional<std::tuple<int, int, int>> id_params;
};

/// Accepts built-in specs ("factor-extremal:n=5,a=2", "id-extremal:n=13,delta=4,r=1",
/// "star:n=4,k=1", "complete:n=5", "cycle:n=5", "path:n=4"), a file holding graph6
/// or an edge list ("n" then one "u v" per line), or a literal graph6 string.
LoadedGraph load_graph(const std::string& input);

struct DecideRequest {
  std::string input;
  std::string task = "factor";  // factor | matching | critical
  int a = 1;
  int b = 1;
};

struct DecideResult {
  int exit_code = 2;  // 0 yes, 1 no, 2 error
  nlohmann::json body;
};

DecideResult decide(const DecideRequest& request);

nlohmann::json to_json(const VertexSet& s);

}  // namespace specfactor::verify
