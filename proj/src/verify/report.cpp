#include <fstream>

#include "specfactor/errors.hpp"
#include "specfactor/verify.hpp"

namespace specfactor::verify {

void VerificationReport::fail(std::string input, std::string expected, std::string observed) {
  ++cases;
  failures.push_back({std::move(input), std::move(expected), std::move(observed)});
}

void VerificationReport::skip(const std::string& reason) {
  ++cases;
  ++skipped;
  ++skip_reasons[reason];
}

void VerificationReport::merge(const VerificationReport& other) {
  cases += other.cases;
  passes += other.passes;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [k, v] : other.skip_reasons) skip_reasons[k] += v;
  for (const auto& [k, v] : other.counters) counters[k] += v;
}

void VerificationReport::add_part(VerificationReport part) {
  merge(part);
  wall_time += part.wall_time;
  parts.push_back(std::move(part));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["cases"] = cases;
  j["passes"] = passes;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
  }
  j["skipped"] = {{"count", skipped}, {"reasons", skip_reasons}};
  if (!counters.empty()) j["counters"] = counters;
  j["wallTime"] = wall_time;
  if (!parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : parts) j["parts"].push_back(p.to_json());
  }
  return j;
}

double robust_spectral_radius(const Graph& g, double tol) {
  if (g.order() == 0) return 0.0;
  try {
    return spectral_radius<double>(g, tol).value;
  } catch (const convergence_error&) {
    return dense_spectral_radius<double>(g);
  }
}

std::vector<CorpusEntry> load_corpora(const std::vector<std::string>& paths, VerificationReport& log) {
  std::vector<CorpusEntry> out;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      log.skip("unreadable corpus file " + path);
      continue;
    }
    Corpus corpus = read_graph6_corpus(in);
    for (const auto& e : corpus.errors) log.skip("parse error: " + path + ":" + std::to_string(e.line) + ": " + e.message);
    for (auto& entry : corpus.graphs) out.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json to_json(const VertexSet& s) { return s.members(); }

}  // namespace specfactor::verify
