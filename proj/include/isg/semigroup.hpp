#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isg/element_set.hpp"
#include "isg/relation.hpp"

namespace isg {

/// A finite inverse semigroup given by its multiplication table.
///
/// Elements are dense indices 0..size()-1; labels are cosmetic. Instances are
/// only produced by validate_inverse_semigroup (or by constructors in this
/// library that call it), so the inverse map, idempotent mask and zero are
/// always consistent with the table.
class InverseSemigroup {
 public:
  std::size_t size() const noexcept { return n_; }
  Index mul(Index a, Index b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Index inv(Index a) const noexcept { return inv_[a]; }
  bool is_idempotent(Index a) const noexcept { return idempotent_[a] != 0; }
  const std::optional<Index>& zero() const noexcept { return zero_; }
  bool has_zero() const noexcept { return zero_.has_value(); }

  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Index of the element with the given label, if any.
  std::optional<Index> find(std::string_view label) const;

  std::span<const Index> table() const noexcept { return table_; }
  std::vector<std::vector<Index>> table_rows() const;

  /// s*s and ss*.
  Index source_idempotent(Index s) const noexcept { return mul(inv(s), s); }
  Index range_idempotent(Index s) const noexcept { return mul(s, inv(s)); }

  friend bool operator==(const InverseSemigroup&, const InverseSemigroup&) = default;

 private:
  friend InverseSemigroup build_inverse_semigroup(std::size_t, std::vector<Index>,
                                                  std::vector<std::string>, bool);
  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<unsigned char> idempotent_;
  std::optional<Index> zero_;
  std::vector<std::string> labels_;
};

struct ValidationOptions {
  /// The O(n^3) associativity scan. Generated tables that are correct by
  /// construction may skip it.
  bool check_associativity = true;
  /// Hard cap on the table size while associativity is being checked.
  std::size_t max_checked_size = 512;
};

/// Validates a square product table and derives inverses, idempotents and the
/// zero. Errors: kMalformedTable, kNotAssociative(a,b,c), kNoInverse(s),
/// kNonUniqueInverse(s, witnesses...), kSizeBudgetExceeded.
InverseSemigroup validate_inverse_semigroup(const std::vector<std::vector<Index>>& table,
                                            std::vector<std::string> labels = {},
                                            const ValidationOptions& options = {});
InverseSemigroup validate_inverse_semigroup(std::size_t n, std::vector<Index> flat_table,
                                            std::vector<std::string> labels = {},
                                            const ValidationOptions& options = {});

ElementSet idempotents(const InverseSemigroup& s);

/// s <= t in the natural partial order: s = te for some idempotent e.
bool natural_leq(const InverseSemigroup& s, Index a, Index b);

/// The down-set of a in the natural order.
ElementSet down_set(const InverseSemigroup& s, Index a);

/// Maximal elements of the intersection of the down-sets of a and b. Always
/// finite here, so every finite inverse semigroup is Hausdorff.
ElementSet lower_intersection_generators(const InverseSemigroup& s, Index a, Index b);

/// Partition by the H-relation: s*s = t*t and ss* = tt*.
Relation h_classes(const InverseSemigroup& s);

/// The maximal subgroup H_e at an idempotent e.
ElementSet maximal_subgroup(const InverseSemigroup& s, Index e);

/// D-classes (cosmetic display only).
Relation d_classes(const InverseSemigroup& s);

bool is_clifford(const InverseSemigroup& s);
bool is_e_unitary(const InverseSemigroup& s);
/// Throws Error(kZeroRequired) when s has no zero.
bool is_zero_e_unitary(const InverseSemigroup& s);

/// Elements commuting with every idempotent. The result is checked to be an
/// inverse subsemigroup before it is returned.
ElementSet centralizer(const InverseSemigroup& s);

/// Closed under products and inverses.
bool is_inverse_subsemigroup(const InverseSemigroup& s, const ElementSet& t);

/// Contains every idempotent and satisfies s* T s within T for all s.
bool is_normal_subsemigroup(const InverseSemigroup& s, const ElementSet& t);

/// The subsemigroup on `members` as a stand-alone semigroup, with labels
/// carried over. `embedding[i]` is the parent index of new element i.
struct Subsemigroup {
  InverseSemigroup semigroup;
  std::vector<Index> embedding;
};
Subsemigroup restrict_to(const InverseSemigroup& s, const ElementSet& members);

}  // namespace isg
