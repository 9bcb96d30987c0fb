#include <doctest.h>

#include "isg/builtins.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"

using namespace isg;

namespace {

std::shared_ptr<const InverseSemigroup> named(const char* name) {
  return std::make_shared<const InverseSemigroup>(builtin(name));
}

}  // namespace

TEST_CASE("phi is an isomorphism for a fundamental semigroup") {
  const auto p = mu_projection_hom(named("diamond_munn"));
  CHECK(p.hom.source->size() == p.hom.target->size());
  CHECK(is_isomorphism(*p.hom.source, *p.hom.target, p.hom.map));
}

TEST_CASE("phi keeps the filter through a zero that only S/mu has") {
  // The bottom of the chain is a zero of S/mu but not of S.
  const auto s = named("clifford_chain:identity");
  REQUIRE_FALSE(s->has_zero());
  const auto p = mu_projection_hom(s);
  REQUIRE(p.munn.target.has_zero());
  CHECK(p.target.action.space_size == p.source.action.space_size);
  CHECK(is_strongly_surjective(p.hom));
  CHECK(kernel(p.hom) == ElementSet::full(p.hom.source->size()));
}

TEST_CASE("phi is strongly surjective with kernel G(Z) over the corpus") {
  for (const auto& c : corpus()) {
    const auto p = mu_projection_hom(c.semigroup);
    CHECK_MESSAGE(is_strongly_surjective(p.hom), c.name);
    const auto& q = p.munn.target;
    if (q.has_zero() ? is_zero_e_unitary(q) : is_e_unitary(q))
      CHECK(kernel(p.hom) == induced_subgroupoid(p.source.action, p.source.germs, centralizer(*c.semigroup)).arrows);
  }
}

TEST_CASE("split decomposition with two nontrivial factors") {
  // B(Z_2, 2): G(Z) is a Z_2 bundle over two points and G(S/mu) the pair groupoid.
  const auto s = named("brandt:2:2");
  const auto r = find_split_transversal(*s);
  REQUIRE(r.has_value());
  const auto split = split_iso_check(s, *r);
  CHECK(split.ok);
  CHECK(split.centralizer_groupoid.groupoid.size() == 4);
  CHECK(split.projection.target.groupoid->size() == 4);
  CHECK(split.product.groupoid.size() == 8);
  CHECK(groupoid_isomorphic(split.product.groupoid, *split.projection.source.groupoid).has_value());
}

TEST_CASE("the semidirect diamond has no split transversal") {
  // r must send the class of (0,1) to an idempotent, but (1,t)(0,1) = (0,t).
  CHECK_FALSE(find_split_transversal(*named("semidirect_diamond")).has_value());
}

TEST_CASE("a bad transversal is rejected") {
  const auto s = named("group:cyclic:2");
  try {
    split_iso_check(s, {1});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotATransversal);
  }
}

TEST_CASE("sigma cocycle") {
  const auto c = sigma_cocycle(named("group:cyclic:3"));
  CHECK(c.hom.target->size() == 3);
  CHECK(kernel(c.hom) == c.hom.source->units());
  const auto chain = sigma_cocycle(named("clifford_chain:identity"));
  CHECK(kernel(chain.hom) == chain.hom.source->units());
  try {
    sigma_cocycle(named("b2"));
    FAIL("accepted a zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroPresent);
  }
}

TEST_CASE("non-E-unitary zero-free semigroup has a larger cocycle kernel") {
  // clifford_chain:kill sends the bottom group to the identity, so u f = f is idempotent with u not.
  const auto s = named("clifford_chain:kill");
  REQUIRE_FALSE(is_e_unitary(*s));
  const auto c = sigma_cocycle(s);
  CHECK(kernel(c.hom).count() > c.hom.source->units().count());
}
