#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "isg/element_set.hpp"
#include "isg/semigroup.hpp"

namespace isg {

/// A labelled open set of a groupoid's topology basis.
struct BasisSet {
  ElementSet arrows;
  std::string label;
};

/// A finite groupoid with an explicit topology basis.
///
/// Arrows are dense indices. compose(a, b) is defined iff d(a) = r(b) and is
/// kNone otherwise. Units are arrows u with r(u) = d(u) = u. Interior and
/// closure computations consume only `basis()`; groupoids assembled without a
/// declared basis get the discrete one and report
/// basis_is_assumed_discrete().
class FiniteGroupoid {
 public:
  static constexpr Index kNone = static_cast<Index>(-1);

  struct Data {
    std::vector<std::string> labels;
    std::vector<Index> range;
    std::vector<Index> source;
    std::vector<Index> inverse;
    std::vector<Index> composition;  // n*n, kNone where undefined
    std::vector<BasisSet> basis;     // empty means "assume discrete"
  };

  /// Checks every groupoid axiom exhaustively. Errors: kInvalidGroupoid.
  static FiniteGroupoid build(Data data);

  std::size_t size() const noexcept { return n_; }
  Index r(Index a) const noexcept { return data_.range[a]; }
  Index d(Index a) const noexcept { return data_.source[a]; }
  Index inv(Index a) const noexcept { return data_.inverse[a]; }
  Index compose(Index a, Index b) const noexcept { return data_.composition[std::size_t{a} * n_ + b]; }
  bool is_unit(Index a) const noexcept { return r(a) == a && d(a) == a; }
  const ElementSet& units() const noexcept { return units_; }
  const std::vector<Index>& unit_list() const noexcept { return unit_list_; }
  const std::string& label(Index a) const { return data_.labels[a]; }
  const std::vector<std::string>& labels() const noexcept { return data_.labels; }
  const std::vector<BasisSet>& basis() const noexcept { return data_.basis; }
  bool basis_is_assumed_discrete() const noexcept { return assumed_discrete_; }

  /// All (a, b, ab) with d(a) = r(b).
  const std::vector<std::tuple<Index, Index, Index>>& composable_pairs() const noexcept {
    return pairs_;
  }
  /// d-fiber { a : d(a) = u }, in index order.
  const std::vector<Index>& source_fiber(Index u) const { return source_fiber_[u]; }

 private:
  std::size_t n_ = 0;
  Data data_;
  ElementSet units_;
  std::vector<Index> unit_list_;
  std::vector<std::tuple<Index, Index, Index>> pairs_;
  std::vector<std::vector<Index>> source_fiber_;
  bool assumed_discrete_ = false;
};

std::vector<BasisSet> discrete_basis(std::size_t n);

/// Pair groupoid on n points; arrow i*n+j goes from j to i.
FiniteGroupoid pair_groupoid(std::size_t n);
/// Only units.
FiniteGroupoid unit_groupoid(std::size_t n);
/// A group, as a one-unit groupoid, on the given elements of a semigroup
/// (which must form a group under its product).
FiniteGroupoid group_groupoid(const InverseSemigroup& s, const ElementSet& elements);

/// A groupoid with exactly one unit.
class FiniteGroup {
 public:
  /// Errors: kInvalidGroupoid when g has more than one unit.
  explicit FiniteGroup(FiniteGroupoid g);
  const FiniteGroupoid& groupoid() const noexcept { return g_; }
  std::size_t order() const noexcept { return g_.size(); }

 private:
  FiniteGroupoid g_;
};

/// A subgroupoid extracted as a stand-alone groupoid. Local arrow i is
/// `to_ambient[i]`; the basis is the subspace basis.
struct Subgroupoid {
  FiniteGroupoid groupoid;
  std::vector<Index> to_ambient;
  ElementSet arrows;  // ambient indices
};

/// Errors: kInvalidGroupoid when `arrows` is not closed under the operations.
Subgroupoid restrict(const FiniteGroupoid& g, const ElementSet& arrows);

ElementSet iso_bundle(const FiniteGroupoid& g);
/// Union of the basis sets contained in `set`.
ElementSet interior(const FiniteGroupoid& g, const ElementSet& set);
ElementSet iso_interior(const FiniteGroupoid& g);
bool is_open(const FiniteGroupoid& g, const ElementSet& set);
bool is_closed(const FiniteGroupoid& g, const ElementSet& set);

bool is_group_bundle(const FiniteGroupoid& g);
/// Every nonempty open set avoiding the units contains an arrow with d != r.
bool is_effective(const FiniteGroupoid& g);
/// The interior of the isotropy is the unit space.
bool is_essentially_principal(const FiniteGroupoid& g);

/// Isotropy group at a unit.
FiniteGroup fiber_group(const FiniteGroupoid& g, Index unit);
ElementSet isotropy_at(const FiniteGroupoid& g, Index unit);

struct SubgroupoidProperties {
  bool is_subgroupoid = false;
  bool open = false;
  bool closed = false;
  bool wide = false;
  bool normal = false;
  bool group_bundle = false;
};
SubgroupoidProperties subgroupoid_properties(const FiniteGroupoid& g, const ElementSet& h);

/// A homomorphism between finite groupoids.
struct GroupoidHom {
  std::shared_ptr<const FiniteGroupoid> source;
  std::shared_ptr<const FiniteGroupoid> target;
  std::vector<Index> map;
};

/// Unit-preserving and multiplicative on every composable pair.
bool is_homomorphism(const FiniteGroupoid& source, const FiniteGroupoid& target,
                     const std::vector<Index>& map);
/// Bijective on units, and maps every d-fiber onto the d-fiber of the image unit.
bool is_strongly_surjective(const GroupoidHom& hom);
/// Arrows mapped to units.
ElementSet kernel(const GroupoidHom& hom);
/// Bijective homomorphism whose inverse is also a homomorphism.
bool is_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b,
                    const std::vector<Index>& map);

/// Left action of G on a group bundle H over G's units.
///
/// `bundle[h]` is the G-unit under arrow h of H. `act[g * |H| + h]` is g.h,
/// defined (not kNone) iff bundle[h] = d(g).
struct BundleAction {
  std::vector<Index> bundle;
  std::vector<Index> act;
};

/// g.h = g h g^-1 computed in an ambient groupoid containing both H and the
/// image of G. `g_to_ambient` need not come from a subgroupoid restriction.
BundleAction conjugation_action(const FiniteGroupoid& ambient, const Subgroupoid& h,
                                const FiniteGroupoid& g, const std::vector<Index>& g_to_ambient);

struct SemidirectProduct {
  FiniteGroupoid groupoid;
  std::vector<std::pair<Index, Index>> pairs;  // arrow -> (h, g)
};

/// H x| G = { (h, g) : p(h) = r(g) } with (h1,g1)(h2,g2) = (h1 (g1.h2), g1 g2)
/// and (h,g)^-1 = (g^-1 . h^-1, g^-1). Errors: kIncompatibleBundle.
SemidirectProduct semidirect_product(const FiniteGroupoid& h, const FiniteGroupoid& g,
                                     const BundleAction& action);

struct IsomorphismOptions {
  std::size_t max_arrows = 64;
  std::size_t max_nodes = 2'000'000;
};

/// Exact backtracking search for an isomorphism a -> b with propagation
/// through composition, ranges, sources and inverses. Errors:
/// kSearchBudgetExceeded.
std::optional<std::vector<Index>> groupoid_isomorphic(const FiniteGroupoid& a,
                                                      const FiniteGroupoid& b,
                                                      const IsomorphismOptions& options = {});

}  // namespace isg
