#include "specfactor/graph6.hpp"

#include <fstream>
#include <istream>

namespace specfactor {

namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  using k = graph6_error::kind;
  if (text.empty()) throw graph6_error(k::malformed_header, "graph6: empty input");
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw graph6_error(k::malformed_header, "graph6: multi-byte size header (n > 62) unsupported");
  if (head < kBias || head > 126) throw graph6_error(k::malformed_header, "graph6: size byte out of range");
  const int n = head - kBias;

  const std::size_t need = body_length(n);
  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size() && i < need; ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) {
      throw graph6_error(k::bad_character, "graph6: byte " + std::to_string(i + 1) + " out of range");
    }
  }
  if (body.size() < need) {
    throw graph6_error(k::truncated, "graph6: body has " + std::to_string(body.size()) + " bytes, expected " +
                                         std::to_string(need));
  }
  if (body.size() > need) {
    throw graph6_error(k::trailing_garbage,
                       "graph6: " + std::to_string(body.size() - need) + " unexpected trailing bytes");
  }

  Graph::Builder b(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int chunk = static_cast<unsigned char>(body[bit / 6]) - kBias;
      if ((chunk >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int chunk = static_cast<unsigned char>(body[bit / 6]) - kBias;
    if (chunk & ((1 << (6 - bit % 6)) - 1)) throw graph6_error(k::nonzero_padding, "graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw limit_exceeded("emit_graph6", n, kGraph6MaxOrder);
  std::vector<int> body(body_length(n), 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) body[bit / 6] |= 1 << (5 - bit % 6);
    }
  }
  std::string out(1, static_cast<char>(n + kBias));
  for (int chunk : body) out.push_back(static_cast<char>(chunk + kBias));
  return out;
}

Corpus read_graph6_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      corpus.graphs.push_back({number, line, std::move(g)});
    } catch (const graph6_error& e) {
      corpus.errors.push_back({number, line, e.what()});
    }
  }
  return corpus;
}

Corpus read_graph6_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open corpus file " + path);
  return read_graph6_corpus(in);
}

}  // namespace specfactor
