#include "specfactor/vertex_set.hpp"

#include <algorithm>

#include "specfactor/errors.hpp"

namespace specfactor {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw precondition_error("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw precondition_error("VertexSet::from_mask: universe above 64");
  VertexSet s(universe);
  if (universe == 0) return s;
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw precondition_error("VertexSet: vertex " + std::to_string(v) + " outside universe of " +
                             std::to_string(universe_));
  }
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::complement() const {
  VertexSet all = full(universe_);
  return all -= *this;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) throw precondition_error("VertexSet: union across universes");
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

int VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return -1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw precondition_error("VertexSet::mask: universe above 64");
  return words_.empty() ? 0 : words_[0];
}

}  // namespace specfactor
