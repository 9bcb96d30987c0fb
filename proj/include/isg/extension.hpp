#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "isg/action.hpp"
#include "isg/congruence.hpp"
#include "isg/groupoid.hpp"

namespace isg {

/// The universal action of S with its groupoid of germs.
struct UniversalGroupoid {
  std::shared_ptr<const InverseSemigroup> semigroup;
  Action action;
  GermGroupoid germs;
  std::shared_ptr<const FiniteGroupoid> groupoid;
};

UniversalGroupoid universal_groupoid(std::shared_ptr<const InverseSemigroup> s);
/// The same construction over an explicit invariant family of filters.
UniversalGroupoid universal_groupoid(std::shared_ptr<const InverseSemigroup> s, std::vector<Filter> points);

/// phi: G(S) -> G(S/mu), [s,F] -> [mu(s), F], filters matched through the
/// bijection E(S) -> E(S/mu). The target is built over the images of the
/// filters of E(S): when S/mu has a zero that S lacks, the filter through it
/// is kept.
struct MuProjection {
  QuotientMap munn;
  UniversalGroupoid source;
  UniversalGroupoid target;
  std::vector<Index> point_map;  // filters of S -> filters of S/mu
  GroupoidHom hom;
};

MuProjection mu_projection_hom(std::shared_ptr<const InverseSemigroup> s);

/// c: G(S) -> sigma(S), [s,F] -> sigma-class of s. Errors: kZeroPresent.
struct SigmaCocycle {
  GroupImage image;
  UniversalGroupoid source;
  GroupoidHom hom;
};

SigmaCocycle sigma_cocycle(std::shared_ptr<const InverseSemigroup> s);

/// Everything built while checking G(S) = G(Z) x| G(S/mu).
struct SplitCheck {
  bool ok = false;
  MuProjection projection;
  Subgroupoid centralizer_groupoid;
  std::vector<Index> rho;  // arrows of G(S/mu) -> arrows of G(S)
  SemidirectProduct product;
  std::vector<Index> certificate;  // product arrows -> G(S)
};

/// Errors: kNotATransversal when r is not a splitting homomorphism or the
/// induced map on germs is not an injective homomorphism.
SplitCheck split_iso_check(std::shared_ptr<const InverseSemigroup> s, const std::vector<Index>& r);

}  // namespace isg
