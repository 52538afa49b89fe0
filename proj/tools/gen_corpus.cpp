// Generates isomorphism-class corpora by vertex extension with canonical dedupe.
//
//   gen_corpus --out data/corpus --max-n 8 --sample 2000 --seed 9

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "specfactor/graph6.hpp"
#include "specfactor/isomorphism.hpp"

using namespace specfactor;

namespace {

Graph extend(const Graph& g, std::uint32_t mask) {
  const int n = g.order();
  Graph::Builder b(n + 1);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) b.add_edge(v, n);
  }
  return std::move(b).build();
}

void write(const std::filesystem::path& path, const std::set<std::string>& lines) {
  std::ofstream out(path);
  for (const auto& line : lines) out << line << '\n';
  std::cerr << path.string() << ": " << lines.size() << " graphs\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small-graph corpus generator"};
  std::string out_dir = "data/corpus";
  int max_n = 8, sample = 2000;
  std::uint64_t seed = 9;
  app.add_option("--out", out_dir)->capture_default_str();
  app.add_option("--max-n", max_n)->check(CLI::Range(0, 10))->capture_default_str();
  app.add_option("--sample", sample, "connected graphs of order max-n + 1 (0 to skip)")->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  std::vector<Graph> level{Graph(0)};
  write(std::filesystem::path(out_dir) / "graph0.g6", {emit_graph6(Graph(0))});
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::string> seen;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) seen.insert(canonical_form(extend(g, mask)));
    }
    write(std::filesystem::path(out_dir) / ("graph" + std::to_string(n) + ".g6"), seen);
    level.clear();
    for (const auto& line : seen) level.push_back(parse_graph6(line));
  }

  if (sample > 0 && max_n >= 1) {
    // connected graphs on max_n + 1 vertices: a connected graph minus a
    // non-cut vertex is connected, so extending connected graphs reaches all
    std::vector<Graph> connected;
    for (const Graph& g : level) {
      if (is_connected(g)) connected.push_back(g);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, connected.size() - 1);
    std::uniform_int_distribution<std::uint32_t> nbrs(1, (std::uint32_t{1} << max_n) - 1);
    std::set<std::string> seen;
    for (long tries = 0; static_cast<int>(seen.size()) < sample && tries < 100L * sample; ++tries) {
      seen.insert(canonical_form(extend(connected[pick(rng)], nbrs(rng))));
    }
    write(std::filesystem::path(out_dir) / ("graph" + std::to_string(max_n + 1) + "c_sample.g6"), seen);
  }
  return 0;
}
