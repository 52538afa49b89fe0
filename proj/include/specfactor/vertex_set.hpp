#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace specfactor {

/// Subset of {0, ..., universe-1}, stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);
  /// Low `universe` bits of `mask`; requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  int size() const noexcept;
  bool empty() const noexcept;

  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v);
  void erase(int v);

  VertexSet complement() const;
  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet&, const VertexSet&) = default;

  /// Smallest member, or -1 when empty.
  int first() const noexcept;
  std::vector<int> members() const;
  /// Packed form; requires universe <= 64.
  std::uint64_t mask() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace specfactor
