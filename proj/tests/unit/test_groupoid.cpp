#include <doctest.h>

#include "isg/builtins.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "isg/groupoid.hpp"

using namespace isg;

namespace {

// The action groupoid of Z_n acting trivially on k points: k disjoint copies of Z_n.
FiniteGroupoid bundle_of_cyclic(std::size_t n, std::size_t k) {
  FiniteGroupoid::Data d;
  const std::size_t size = n * k;
  d.composition.assign(size * size, FiniteGroupoid::kNone);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t a = 0; a < n; ++a) {
      const Index i = static_cast<Index>(p * n + a);
      d.labels.push_back(std::to_string(p) + ":" + std::to_string(a));
      d.range.push_back(static_cast<Index>(p * n));
      d.source.push_back(static_cast<Index>(p * n));
      d.inverse.push_back(static_cast<Index>(p * n + (n - a) % n));
      for (std::size_t b = 0; b < n; ++b) d.composition[i * size + p * n + b] = static_cast<Index>(p * n + (a + b) % n);
    }
  return FiniteGroupoid::build(std::move(d));
}

}  // namespace

TEST_CASE("pair groupoid") {
  const auto g = pair_groupoid(3);
  CHECK(g.size() == 9);
  CHECK(g.units().count() == 3);
  CHECK(iso_bundle(g) == g.units());
  CHECK(is_effective(g));
  CHECK(is_essentially_principal(g));
  CHECK_FALSE(is_group_bundle(g));
}

TEST_CASE("group bundles") {
  const auto g = bundle_of_cyclic(3, 2);
  CHECK(is_group_bundle(g));
  CHECK(iso_interior(g).count() == 6);
  CHECK_FALSE(is_effective(g));
  CHECK(fiber_group(g, 0).order() == 3);
  const auto p = subgroupoid_properties(g, g.units());
  CHECK(p.is_subgroupoid);
  CHECK(p.wide);
  CHECK(p.open);
  CHECK(p.closed);
  CHECK(p.normal);
  CHECK(p.group_bundle);
}

TEST_CASE("groupoid validation rejects a broken inverse") {
  FiniteGroupoid::Data d;
  d.labels = {"u", "g"};
  d.range = {0, 0};
  d.source = {0, 0};
  d.inverse = {0, 0};  // g g should then be u
  d.composition = {0, 1, 1, 1};
  try {
    FiniteGroupoid::build(std::move(d));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidGroupoid);
  }
}

TEST_CASE("isomorphism search") {
  CHECK(groupoid_isomorphic(bundle_of_cyclic(2, 2), bundle_of_cyclic(2, 2)).has_value());
  CHECK_FALSE(groupoid_isomorphic(bundle_of_cyclic(4, 1), pair_groupoid(2)).has_value());
  CHECK_FALSE(groupoid_isomorphic(bundle_of_cyclic(2, 2), pair_groupoid(2)).has_value());
  // Z_4 and Z_2 x Z_2 have the same size but are not isomorphic.
  const auto z4 = group_groupoid(builtin("group:cyclic:4"), ElementSet::full(4));
  FiniteGroupoid::Data d;
  d.labels = {"e", "a", "b", "c"};
  d.range = d.source = {0, 0, 0, 0};
  d.inverse = {0, 1, 2, 3};
  d.composition = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const auto v4 = FiniteGroupoid::build(std::move(d));
  CHECK_FALSE(groupoid_isomorphic(z4, v4).has_value());
  const auto iso = groupoid_isomorphic(z4, z4);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(z4, z4, *iso));
}

TEST_CASE("isomorphism search reports its budget") {
  const auto big = pair_groupoid(9);
  try {
    groupoid_isomorphic(big, big);
    FAIL("no budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSearchBudgetExceeded);
  }
}

TEST_CASE("homomorphisms, kernels and strong surjectivity") {
  auto src = std::make_shared<const FiniteGroupoid>(bundle_of_cyclic(2, 2));
  auto dst = std::make_shared<const FiniteGroupoid>(bundle_of_cyclic(1, 2));
  GroupoidHom h{src, dst, {0, 0, 1, 1}};
  CHECK(is_homomorphism(*src, *dst, h.map));
  CHECK(is_strongly_surjective(h));
  CHECK(kernel(h).count() == 4);
  GroupoidHom bad{src, dst, {0, 1, 1, 1}};
  CHECK_FALSE(is_homomorphism(*src, *dst, bad.map));
}

TEST_CASE("semidirect product with trivial factors") {
  // H = units of G, trivial action: the product is G itself.
  const auto g = pair_groupoid(2);
  const auto h = restrict(g, g.units());
  std::vector<Index> identity(g.size());
  for (Index a = 0; a < g.size(); ++a) identity[a] = a;
  const auto action = conjugation_action(g, h, g, identity);
  const auto prod = semidirect_product(h.groupoid, g, action);
  CHECK(prod.groupoid.size() == g.size());
  CHECK(groupoid_isomorphic(prod.groupoid, g).has_value());
  // G a group bundle over one point, acting on itself: |H x| G| = |H| |G|.
  const auto z2 = bundle_of_cyclic(2, 1);
  const auto whole = restrict(z2, ElementSet::full(2));
  const auto prod2 = semidirect_product(whole.groupoid, z2, conjugation_action(z2, whole, z2, {0, 1}));
  CHECK(prod2.groupoid.size() == 4);
}

TEST_CASE("restriction and interiors") {
  const auto g = bundle_of_cyclic(2, 2);
  const ElementSet one_fiber(4, {0, 1});
  const auto r = restrict(g, one_fiber);
  CHECK(r.groupoid.size() == 2);
  CHECK(is_open(g, one_fiber));
  CHECK(interior(g, one_fiber) == one_fiber);
}
