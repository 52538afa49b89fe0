#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specfactor/errors.hpp"
#include "specfactor/graph.hpp"

namespace specfactor {

inline constexpr int kGraph6MaxOrder = 62;

class graph6_error : public error {
 public:
  enum class kind {
    malformed_header,  // missing, out-of-range or multi-byte size field
    bad_character,     // body byte outside 63..126
    truncated,         // fewer body bytes than n(n-1)/2 bits need
    trailing_garbage,  // bytes after the body
    nonzero_padding,   // unused low bits of the last byte are set
  };

  graph6_error(kind k, const std::string& what) : error(what), kind_(k) {}
  kind which() const noexcept { return kind_; }

 private:
  kind kind_;
};

/// Parses one graph6 line (1-byte size form, n <= 62). Trailing '\r' / '\n' is not accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

struct CorpusEntry {
  std::size_t line = 0;
  std::string text;
  Graph graph;
};

struct CorpusParseError {
  std::size_t line = 0;
  std::string text;
  std::string message;
};

struct Corpus {
  std::vector<CorpusEntry> graphs;
  std::vector<CorpusParseError> errors;
};

/// One graph per line; blank lines skipped; bad lines collected, not fatal.
Corpus read_graph6_corpus(std::istream& in);
Corpus read_graph6_corpus_file(const std::string& path);

}  // namespace specfactor
