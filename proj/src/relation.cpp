#include "isg/relation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "isg/error.hpp"

namespace isg {

Relation Relation::from_blocks(std::size_t n, std::vector<std::vector<Index>> blocks) {
  Relation r;
  r.block_of_.assign(n, static_cast<Index>(n));
  std::size_t covered = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorKind::kMalformedTable, "relation has an empty block");
    std::sort(b.begin(), b.end());
    for (Index x : b) {
      if (x >= n) throw Error(ErrorKind::kMalformedTable, "relation index out of range", {x});
      if (r.block_of_[x] != n)
        throw Error(ErrorKind::kMalformedTable, "relation blocks overlap", {x});
      r.block_of_[x] = 0;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorKind::kMalformedTable, "relation blocks do not cover");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (Index x : blocks[k]) r.block_of_[x] = static_cast<Index>(k);
  r.blocks_ = std::move(blocks);
  return r;
}

Relation Relation::from_keys(const std::vector<std::size_t>& key) {
  Relation r;
  const std::size_t n = key.size();
  r.block_of_.assign(n, 0);
  std::map<std::size_t, Index> seen;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = seen.emplace(key[x], static_cast<Index>(r.blocks_.size()));
    if (inserted) r.blocks_.emplace_back();
    r.blocks_[it->second].push_back(static_cast<Index>(x));
    r.block_of_[x] = it->second;
  }
  // Blocks were opened in order of their least element, so already canonical.
  return r;
}

Relation Relation::identity(std::size_t n) {
  std::vector<std::size_t> key(n);
  std::iota(key.begin(), key.end(), std::size_t{0});
  return from_keys(key);
}

Relation Relation::universal(std::size_t n) { return from_keys(std::vector<std::size_t>(n, 0)); }

bool Relation::refines(const Relation& coarser) const {
  if (coarser.universe() != universe()) return false;
  for (const auto& b : blocks_)
    for (Index x : b)
      if (coarser.block_of_[x] != coarser.block_of_[b.front()]) return false;
  return true;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), Index{0});
}

Index UnionFind::find(Index x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Index a, Index b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

Relation UnionFind::to_relation() {
  std::vector<std::size_t> key(parent_.size());
  for (std::size_t x = 0; x < key.size(); ++x) key[x] = find(static_cast<Index>(x));
  return Relation::from_keys(key);
}

}  // namespace isg
