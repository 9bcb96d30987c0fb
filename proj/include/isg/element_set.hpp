#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace isg {

using Index = std::uint32_t;

/// Fixed-universe bitset over dense indices 0..universe-1.
///
/// Used for subsets of semigroup elements, filters over a semilattice, point
/// sets of an action space and arrow sets of a groupoid. Two sets compare
/// equal only when their universes agree.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Index> members)
      : ElementSet(universe) {
    for (Index i : members) insert(i);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
    return s;
  }

  static ElementSet from_indices(std::size_t universe, const std::vector<Index>& members) {
    ElementSet s(universe);
    for (Index i : members) s.insert(i);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) noexcept {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(std::size_t i) noexcept {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) noexcept {
    assert(universe_ == other.universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet c(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    if (universe_ % 64 != 0 && !c.words_.empty())
      c.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    return c;
  }

  /// Members in increasing order.
  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        out.push_back(static_cast<Index>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Least member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return universe_;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic order on the word representation; used only to give
  /// containers of sets a deterministic order.
  friend bool operator<(const ElementSet& a, const ElementSet& b) noexcept {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.words_ < b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace isg
