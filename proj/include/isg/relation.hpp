#pragma once

#include <cstddef>
#include <vector>

#include "isg/element_set.hpp"

namespace isg {

/// An equivalence relation on 0..n-1 stored as a partition.
///
/// Canonical form: every block is sorted, and blocks are ordered by their
/// least element. Membership queries are O(1) through `block_of`.
class Relation {
 public:
  Relation() = default;

  /// Throws Error(kMalformedTable) if the blocks are not a partition of 0..n-1.
  static Relation from_blocks(std::size_t n, std::vector<std::vector<Index>> blocks);
  /// Builds the partition whose blocks are the fibers of `key` (any labelling).
  static Relation from_keys(const std::vector<std::size_t>& key);
  static Relation identity(std::size_t n);
  static Relation universal(std::size_t n);

  std::size_t universe() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Index>>& blocks() const noexcept { return blocks_; }
  const std::vector<Index>& block(std::size_t b) const { return blocks_[b]; }
  Index block_of(Index x) const { return block_of_[x]; }
  bool related(Index a, Index b) const { return block_of_[a] == block_of_[b]; }

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const Relation& coarser) const;
  bool is_identity() const noexcept { return blocks_.size() == block_of_.size(); }
  bool is_universal() const noexcept { return blocks_.size() <= 1; }

  friend bool operator==(const Relation& a, const Relation& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<Index>> blocks_;
  std::vector<Index> block_of_;
};

/// Disjoint-set forest used to saturate relations.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Index find(Index x);
  /// Returns true when two distinct classes were merged.
  bool unite(Index a, Index b);
  Relation to_relation();

 private:
  std::vector<Index> parent_;
  std::vector<Index> rank_;
};

}  // namespace isg
