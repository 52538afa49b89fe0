#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "specfactor/graph.hpp"
#include "specfactor/graph6.hpp"

namespace testing {

inline std::vector<specfactor::CorpusEntry> corpus(int n) {
  return specfactor::read_graph6_corpus_file(std::string(SPECFACTOR_CORPUS_DIR) + "/graph" + std::to_string(n) + ".g6")
      .graphs;
}

inline specfactor::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  specfactor::Graph::Builder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace testing
