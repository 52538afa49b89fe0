// specfactor: runs the verification suites and single-instance decisions.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "specfactor/verify.hpp"

namespace sv = specfactor::verify;

namespace {

struct Common {
  int jobs = 1;
  double tol = specfactor::kCompareTolerance;
  std::string out;
};

int emit(const sv::VerificationReport& report, const Common& common) {
  const std::string text = report.to_json().dump(2);
  if (common.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream(common.out) << text << '\n';
  }
  std::cerr << report.suite << ": " << report.cases << " cases, " << report.passes << " passed, "
            << report.failures.size() << " failed, " << report.skipped << " skipped\n";
  return report.ok() ? 0 : 1;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--n-range", "expected lo:hi");
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

std::vector<sv::BoundsPair> chosen_pairs(CLI::Option* a_opt, CLI::Option* b_opt, int a, int b) {
  if (a_opt->count() == 0 && b_opt->count() == 0) return sv::kDefaultPairs;
  if (a_opt->count() == 0) throw CLI::RequiredError("--a");
  return {{a, b_opt->count() ? b : a}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional factor and ID-factor-criticality verification"};
  app.set_config("--config", "", "key=value file with default option values");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--tol", common.tol, "spectral comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", common.out, "write the JSON report here instead of stdout");

  int a = 1, b = 1;
  std::vector<std::string> corpus;

  auto* t4 = app.add_subcommand("check-theorem4", "spectral condition for fractional [a,b]-factors over a corpus");
  t4->add_option("--corpus", corpus, "graph6 files")->required()->check(CLI::ExistingFile);
  auto* t4_a = t4->add_option("--a", a, "lower degree bound");
  auto* t4_b = t4->add_option("--b", b, "upper degree bound");

  auto* lem = app.add_subcommand("check-lemmas", "Hamilton path, edge-count, edge-bound and monotonicity suites");
  lem->add_option("--corpus", corpus, "graph6 files")->required()->check(CLI::ExistingFile);
  auto* lem_a = lem->add_option("--a", a, "lower degree bound");
  auto* lem_b = lem->add_option("--b", b, "upper degree bound");
  std::string lem_range = "2:40";
  lem->add_option("--n-range", lem_range, "orders for the monotonicity grid, lo:hi")->capture_default_str();

  sv::Theorem8Options t8_options;
  auto* t8 = app.add_subcommand("check-theorem8", "extremal witness, spectral floor and small analogues");
  t8->add_option("--delta", t8_options.deltas, "minimum degree values");
  t8->add_option("--r", t8_options.rs, "independent set sizes");
  t8->add_option("--n-span", t8_options.n_span, "cells run n = 2 delta + r + 2 .. 2 delta + r + span");
  t8->add_option("--analogue-max-n", t8_options.analogue_max_n, "largest order for brute-force analogues");

  sv::ClaimsOptions claim_options;
  std::string claim_range, csv;
  auto* cl = app.add_subcommand("check-claims", "numeric sweeps of the two spectral claims");
  cl->add_option("--delta", claim_options.deltas, "minimum degree values");
  cl->add_option("--r", claim_options.r, "independent set size");
  cl->add_option("--n-range", claim_range, "override the n grid, lo:hi");
  cl->add_option("--s-stride", claim_options.claim5_s_stride, "step through s for the first claim");
  cl->add_flag("--explore", claim_options.explore, "also evaluate cells below the thresholds");
  cl->add_option("--csv", csv, "write one row per cell");

  sv::DecideRequest request;
  auto* dec = app.add_subcommand("decide", "decide one graph; exit 0 yes, 1 no, 2 error");
  dec->add_option("graph", request.input, "graph6 text, a file, or a built-in like factor-extremal:n=5,a=2")->required();
  dec->add_option("--task", request.task, "factor | matching | critical")
      ->check(CLI::IsMember({"factor", "matching", "critical"}));
  dec->add_option("--a", request.a, "lower degree bound");
  dec->add_option("--b", request.b, "upper degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dec) {
      const sv::DecideResult result = sv::decide(request);
      std::cout << result.body.dump(2) << '\n';
      if (result.exit_code == 2) std::cerr << "error: " << result.body.value("error", "") << '\n';
      return result.exit_code;
    }
    if (*cl) {
      claim_options.jobs = common.jobs;
      claim_options.margin = common.tol;
      if (!claim_range.empty()) claim_options.n_range = parse_range(claim_range);
      std::vector<sv::ClaimRow> rows;
      const auto report = sv::run_claims(claim_options, &rows);
      if (!csv.empty()) {
        std::ofstream file(csv);
        file << sv::claims_csv_header() << '\n';
        for (const auto& row : rows) file << sv::claims_csv_row(row) << '\n';
      }
      return emit(report, common);
    }
    if (*t8) {
      t8_options.jobs = common.jobs;
      return emit(sv::run_theorem8_structure(t8_options), common);
    }

    sv::VerificationReport log;
    const auto entries = sv::load_corpora(corpus, log);
    sv::VerificationReport report;
    if (*t4) {
      sv::Theorem4Options options;
      options.pairs = chosen_pairs(t4_a, t4_b, a, b);
      options.tol = common.tol;
      options.jobs = common.jobs;
      report = sv::run_theorem4(entries, options);
    } else {
      sv::LemmaOptions options;
      options.pairs = chosen_pairs(lem_a, lem_b, a, b);
      std::tie(options.prop1_min_n, options.prop1_max_n) = parse_range(lem_range);
      options.jobs = common.jobs;
      report = sv::run_lemmas(entries, options);
    }
    if (log.cases > 0) {
      log.suite = "corpus";
      report.add_part(log);
    }
    return emit(report, common);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
