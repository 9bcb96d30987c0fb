#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isg/relation.hpp"
#include "isg/semigroup.hpp"

namespace isg {

/// The projection of a semigroup onto its quotient by a congruence.
struct QuotientMap {
  InverseSemigroup source;
  InverseSemigroup target;
  std::vector<Index> projection;  // source index -> target index (= block index)
};

/// Compatibility of R with multiplication on both sides.
bool is_congruence(const InverseSemigroup& s, const Relation& r);

/// s mu t iff ses* = tet* for every idempotent e. The result is checked to
/// be an idempotent-separating congruence contained in H.
Relation mu_relation(const InverseSemigroup& s);

/// Union of the blocks of R that contain an idempotent. For congruences this
/// is cross-checked against { st* : R(s) = R(t) }.
ElementSet kernel_of(const InverseSemigroup& s, const Relation& r);

/// Quotient by a congruence; target element k is block k of R.
/// Errors: kNotACongruence.
QuotientMap quotient(const InverseSemigroup& s, const Relation& r);

/// S / mu.
QuotientMap munn_quotient(const InverseSemigroup& s);

bool is_cryptic(const InverseSemigroup& s);
bool is_fundamental(const InverseSemigroup& s);

/// Every block holds at most one idempotent.
bool is_idempotent_separating(const InverseSemigroup& s, const Relation& r);

/// The least group congruence: s sigma t iff se = te for some idempotent e.
/// The quotient is checked to be a group.
struct GroupImage {
  Relation sigma;
  QuotientMap image;
};
GroupImage sigma_and_group_image(const InverseSemigroup& s);

/// Congruence generated by a set of pairs.
Relation congruence_closure(const InverseSemigroup& s,
                            const std::vector<std::pair<Index, Index>>& seeds);

/// Random idempotent-separating congruences obtained by saturating random
/// H-related seed pairs and keeping the idempotent-separating results.
std::vector<Relation> random_idempotent_separating_congruences(const InverseSemigroup& s,
                                                               std::size_t count,
                                                               std::uint64_t seed);

struct TransversalOptions {
  /// Upper bound on the product of the mu-block sizes.
  double max_block_product = 1e6;
};

/// A homomorphism r : S/mu -> S with mu(r(x)) = x, found by exhaustive
/// backtracking with propagation. std::nullopt means no splitting exists.
/// Errors: kSearchBudgetExceeded.
std::optional<std::vector<Index>> find_split_transversal(const InverseSemigroup& s,
                                                         const QuotientMap& munn,
                                                         const TransversalOptions& options = {});
std::optional<std::vector<Index>> find_split_transversal(const InverseSemigroup& s,
                                                         const TransversalOptions& options = {});

}  // namespace isg
