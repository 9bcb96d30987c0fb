#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/element_set.hpp"
#include "isg/partial_map.hpp"
#include "isg/semigroup.hpp"

namespace isg {

/// A finite meet semilattice with its own dense index space.
///
/// When obtained from a semigroup, `parent_index(i)` is the idempotent of the
/// parent that local index i stands for, and the zero is the parent's zero
/// (a bottom element that is not a zero of the parent is not a zero here).
class Semilattice {
 public:
  static constexpr Index kNone = static_cast<Index>(-1);

  /// Validates associativity, commutativity and idempotence (kNotSemilattice).
  /// The zero is the bottom element (always present in a finite semilattice).
  static Semilattice from_meet_table(std::size_t n, std::vector<Index> meet,
                                     std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  Index meet(Index e, Index f) const noexcept { return meet_[std::size_t{e} * n_ + f]; }
  bool leq(Index e, Index f) const noexcept { return meet(e, f) == e; }
  const std::optional<Index>& zero() const noexcept { return zero_; }
  bool is_zero(Index e) const noexcept { return zero_ && *zero_ == e; }
  const std::string& label(Index e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Index parent_index(Index e) const { return parent_.empty() ? e : parent_[e]; }
  /// Local index of a parent idempotent, or kNone.
  Index local_index(Index parent) const {
    return local_.empty() ? parent : local_[parent];
  }

  ElementSet up_set(Index e) const;
  ElementSet down_set(Index e) const;
  /// Maximal elements strictly below e, excluding the zero.
  std::vector<Index> lower_covers(Index e) const;
  /// Minimal nonzero elements.
  std::vector<Index> atoms() const;

  /// The semilattice viewed as an inverse semigroup (meet as product).
  InverseSemigroup as_semigroup() const;

  friend bool operator==(const Semilattice&, const Semilattice&) = default;

 private:
  friend Semilattice semilattice_of(const InverseSemigroup& s);
  std::size_t n_ = 0;
  std::vector<Index> meet_;
  std::optional<Index> zero_;
  std::vector<std::string> labels_;
  std::vector<Index> parent_;
  std::vector<Index> local_;
};

Semilattice semilattice_of(const InverseSemigroup& s);

/// A filter of E: nonempty, meet-closed, upward closed, zero-free. Every filter
/// of a finite semilattice is principal; `generator` is its least element.
struct Filter {
  ElementSet members;
  Index generator = 0;
  friend bool operator==(const Filter&, const Filter&) = default;
};

bool is_filter(const Semilattice& e, const ElementSet& candidate);

enum class FilterEnumeration { kAuto, kExhaustive, kPrincipal };

/// All filters, ordered by generator index. kAuto enumerates subsets when
/// |E| <= 20 and uses principal filters above that.
std::vector<Filter> all_filters(const Semilattice& e,
                                FilterEnumeration mode = FilterEnumeration::kAuto);

/// Maximal filters; asserted to be the principal filters of the atoms.
std::vector<Filter> ultrafilters(const Semilattice& e);

/// Closure of the ultrafilters in the (discrete) filter space, i.e. the
/// ultrafilters themselves.
std::vector<Filter> tight_spectrum(const Semilattice& e);

/// Throws kZeroRequired when E has no zero.
bool is_zero_disjunctive(const Semilattice& e);

/// N^e_{f1..fn} = { F : e in F, fi not in F }.
struct SpectrumBasisSet {
  Index include = 0;
  std::vector<Index> exclude;

  bool contains(const Filter& f) const;
  ElementSet evaluate(const std::vector<Filter>& points) const;
  std::string label(const Semilattice& e) const;
};

/// For each nonzero e: N^e (all filters containing e) and N^e_{covers of e},
/// which isolates the principal filter of e.
std::vector<SpectrumBasisSet> spectrum_basis(const Semilattice& e);

/// A semigroup realised by partial maps; `maps[i]` is element i.
struct PartialMapSemigroup {
  InverseSemigroup semigroup;
  std::vector<PartialMap> maps;
};

/// Builds the table of a set of partial bijections closed under composition
/// and inversion. Element order follows the input order.
PartialMapSemigroup semigroup_of_partial_maps(std::vector<PartialMap> maps,
                                              const std::vector<std::string>& point_names = {});

/// Closes generators under composition and inversion.
/// Errors: kSizeBudgetExceeded when more than `max_size` elements appear.
PartialMapSemigroup inverse_closure(const std::vector<PartialMap>& generators,
                                    std::size_t max_size = 512,
                                    const std::vector<std::string>& point_names = {});

/// All order isomorphisms between principal ideals of E. Checked to be
/// fundamental. Errors: kSizeBudgetExceeded.
PartialMapSemigroup munn_semigroup(const Semilattice& e, std::size_t max_size = 512);

/// All partial bijections of an n-set. Errors: kSizeBudgetExceeded for n > max_n.
PartialMapSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t max_n = 4);

/// Order isomorphism between two semilattices, if one exists.
std::optional<std::vector<Index>> semilattice_isomorphism(const Semilattice& a,
                                                          const Semilattice& b);

}  // namespace isg
