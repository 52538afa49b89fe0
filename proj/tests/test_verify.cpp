#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "specfactor/verify.hpp"
#include "support.hpp"

using namespace specfactor;
namespace sv = specfactor::verify;

namespace {

std::string corpus_path(int n) { return std::string(SPECFACTOR_CORPUS_DIR) + "/graph" + std::to_string(n) + ".g6"; }

std::vector<CorpusEntry> load(std::initializer_list<int> orders) {
  std::vector<std::string> paths;
  for (int n : orders) paths.push_back(corpus_path(n));
  sv::VerificationReport log;
  auto out = sv::load_corpora(paths, log);
  REQUIRE(log.skipped == 0);
  return out;
}

void require_consistent(const sv::VerificationReport& r) {
  REQUIRE(r.consistent());
  for (const auto& p : r.parts) require_consistent(p);
}

}  // namespace

TEST_CASE("report bookkeeping") {
  sv::VerificationReport r;
  r.suite = "demo";
  r.pass();
  r.skip("because");
  r.skip("because");
  r.fail("x", "y", "z");
  CHECK(r.cases == 4);
  CHECK(r.consistent());
  CHECK_FALSE(r.ok());
  CHECK(r.skip_reasons.at("because") == 2);

  sv::VerificationReport outer;
  outer.suite = "outer";
  outer.add_part(r);
  CHECK(outer.cases == 4);
  CHECK(outer.parts.size() == 1);
  const auto j = outer.to_json();
  CHECK(j["skipped"]["count"] == 2);
  CHECK(j["parts"][0]["suite"] == "demo");
  CHECK(j["failures"].size() == 1);
  CHECK(j.contains("wallTime"));
}

TEST_CASE("sharded runs do not depend on the worker count") {
  auto body = [](std::size_t i, sv::VerificationReport& r) {
    if (i % 7 == 3) {
      r.fail(std::to_string(i), "even", "odd");
    } else if (i % 5 == 0) {
      r.skip("five");
    } else {
      r.pass();
    }
    r.count("seen");
  };
  const auto one = sv::sharded("s", 1000, 1, body);
  for (int jobs : {2, 3, 8, 64}) {
    const auto many = sv::sharded("s", 1000, jobs, body);
    CHECK(many.cases == one.cases);
    CHECK(many.counters == one.counters);
    REQUIRE(many.failures.size() == one.failures.size());
    for (std::size_t i = 0; i < one.failures.size(); ++i) CHECK(many.failures[i].input == one.failures[i].input);
  }
  CHECK(sv::sharded("s", 0, 4, body).cases == 0);
}

TEST_CASE("corpus loading records parse errors as skips") {
  const auto path = std::filesystem::temp_directory_path() / "specfactor_bad.g6";
  std::ofstream(path) << "Bw\nB!\n";
  sv::VerificationReport log;
  const auto entries = sv::load_corpora({path.string(), "/nonexistent/file.g6"}, log);
  CHECK(entries.size() == 1);
  CHECK(log.skipped == 2);
  CHECK(log.consistent());
  std::filesystem::remove(path);
}

TEST_CASE("theorem 4 on all graphs of order 6") {
  const auto corpus = load({6});
  sv::Theorem4Options options;
  options.pairs = {{2, 3}};
  const auto r = sv::run_theorem4(corpus, options);
  CHECK(r.ok());
  CHECK(r.consistent());
  CHECK(r.cases == 156);
  CHECK(r.counters.at(sv::boundary_key(6, 2, 3)) == 1);
}

TEST_CASE("theorem 4 parity skip at order 7") {
  const auto corpus = load({7});
  sv::Theorem4Options options;
  options.pairs = {{1, 1}};
  const auto r = sv::run_theorem4(corpus, options);
  CHECK(r.skipped == r.cases);
  CHECK(r.skip_reasons.at("parity: na odd with a = b") == 1044);
  CHECK(r.ok());
}

TEST_CASE("theorem 4 at order 8 with (1, 2)") {
  const auto corpus = load({8});
  sv::Theorem4Options options;
  options.pairs = {{1, 2}};
  options.jobs = 4;
  const auto r = sv::run_theorem4(corpus, options);
  CHECK(r.ok());
  CHECK(r.counters.at(sv::boundary_key(8, 1, 2)) == 1);
}

TEST_CASE("lemma suites on small orders") {
  const auto corpus = load({1, 2, 3, 4, 5, 6});
  sv::LemmaOptions options;
  options.prop1_max_n = 20;
  const auto r = sv::run_lemmas(corpus, options);
  CHECK(r.ok());
  require_consistent(r);
  REQUIRE(r.parts.size() == 4);
  CHECK(r.parts[0].suite == "lemma1");
  CHECK(r.parts[3].suite == "proposition1");
}

TEST_CASE("theorem 8 structure on a short grid") {
  sv::Theorem8Options options;
  options.deltas = {4};
  options.rs = {1};
  options.n_span = 12;
  options.analogue_max_n = 10;
  const auto r = sv::run_theorem8_structure(options);
  CHECK(r.ok());
  require_consistent(r);
  CHECK(r.parts.size() == 3);
}

TEST_CASE("claims report and rows") {
  sv::ClaimsOptions options;
  options.deltas = {4};
  options.n_range = std::pair{89, 92};
  std::vector<sv::ClaimRow> rows;
  const auto r = sv::run_claims(options, &rows);
  require_consistent(r);
  REQUIRE(r.parts.size() == 2);
  CHECK(r.parts[0].ok());
  // below the cubic threshold every second-claim cell is skipped
  CHECK(r.parts[1].skipped == r.parts[1].cases);
  CHECK_FALSE(rows.empty());
  CHECK(sv::claims_csv_row(rows.front()).find("claim5") == 0);
  CHECK(sv::claims_csv_header().find("claim") == 0);
}

TEST_CASE("decide: factor") {
  const auto yes = sv::decide({"Bw", "factor", 1, 1});
  CHECK(yes.exit_code == 0);
  CHECK(yes.body["decision"] == "yes");
  CHECK(yes.body["certificate"]["edges"].size() == 3);
  CHECK(yes.body["certificate"]["edges"][0][2] == 0.5);

  const auto no = sv::decide({"factor-extremal:n=5,a=2", "factor", 2, 3});
  CHECK(no.exit_code == 1);
  CHECK(no.body["witness"]["phi"] == -1);
  CHECK(no.body["witness"]["S"].empty());

  const auto large = sv::decide({"factor-extremal:n=40,a=3", "factor", 3, 4});
  CHECK(large.exit_code == 1);
  CHECK(large.body["witness"]["phi"] == -1);

  CHECK(sv::decide({"Bw", "factor", 2, 1}).exit_code == 2);
}

TEST_CASE("decide: matching") {
  const auto star = sv::decide({"Cs", "matching", 1, 1});
  CHECK(star.exit_code == 1);
  CHECK(star.body["witness"]["S"] == nlohmann::json::array({0}));
  CHECK(star.body["witness"]["odd"] == 3);
  CHECK(sv::decide({"complete:n=6", "matching", 1, 1}).exit_code == 0);
}

TEST_CASE("decide: critical") {
  CHECK(sv::decide({"complete:n=5", "critical", 1, 1}).exit_code == 0);
  const auto small = sv::decide({"id-extremal:n=9,delta=2,r=1", "critical", 1, 1});
  CHECK(small.exit_code == 1);
  CHECK(small.body.contains("witness"));
  const auto big = sv::decide({"id-extremal:n=93,delta=4,r=1", "critical", 1, 1});
  CHECK(big.exit_code == 1);
  CHECK(big.body["method"] == "structured");
  CHECK(big.body["witness"]["odd"] == 6);
  // parity-mismatched cells carry no admissible structured witness
  CHECK(sv::decide({"id-extremal:n=94,delta=4,r=1", "critical", 1, 1}).exit_code == 2);
  const auto limit = sv::decide({"complete:n=20", "critical", 1, 1});
  CHECK(limit.exit_code == 2);
  CHECK(limit.body["error"].get<std::string>().find("exceeds limit") != std::string::npos);
}

TEST_CASE("decide: inputs") {
  CHECK(sv::decide({"B", "factor", 1, 1}).exit_code == 2);
  CHECK(sv::decide({"nosuch:n=4", "factor", 1, 1}).exit_code == 2);
  CHECK(sv::decide({"star:n=4", "factor", 1, 1}).exit_code == 2);
  CHECK(sv::decide({"Bw", "colour", 1, 1}).exit_code == 2);

  const auto dir = std::filesystem::temp_directory_path();
  const auto edges = dir / "specfactor_edges.txt";
  std::ofstream(edges) << "4\n0 1\n1 2\n2 3\n";
  const auto path_result = sv::decide({edges.string(), "matching", 1, 1});
  CHECK(path_result.exit_code == 0);
  CHECK(path_result.body["graph6"] == "Ch");

  const auto g6 = dir / "specfactor_one.g6";
  std::ofstream(g6) << "\nCs\n";
  CHECK(sv::decide({g6.string(), "matching", 1, 1}).exit_code == 1);

  const auto broken = dir / "specfactor_broken.txt";
  std::ofstream(broken) << "3\n0 1\n1\n";
  CHECK(sv::decide({broken.string(), "matching", 1, 1}).exit_code == 2);
  for (const auto& p : {edges, g6, broken}) std::filesystem::remove(p);
}
