// Invariants swept over the whole corpus and over random inputs.
#include <doctest.h>

#include <algorithm>
#include <random>

#include "isg/algebra.hpp"
#include "isg/builtins.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "isg/report.hpp"
#include "oracles.hpp"

using namespace isg;

TEST_CASE("corpus is deterministic and large enough") {
  const auto a = corpus(), b = corpus();
  REQUIRE(a.size() >= 20);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(*a[k].semigroup == *b[k].semigroup);
  }
  CHECK(corpus(1).size() == a.size());
}

TEST_CASE("every corpus semigroup passes every suite") {
  for (const auto& c : corpus()) {
    const auto r = run_suite(c.name, c.semigroup, Suite::kAll, {20, 1});
    for (const auto& check : r.checks) CHECK_MESSAGE(check.pass, c.name << ": " << check.name << " " << check.witness);
  }
}

TEST_CASE("G(Z) sits between the units and Iso°") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const auto u = universal_groupoid(c.semigroup);
    const auto& g = *u.groupoid;
    const auto gz = induced_subgroupoid(u.action, u.germs, centralizer(s));
    CHECK(g.units().is_subset_of(gz.arrows));
    CHECK(gz.arrows.is_subset_of(iso_interior(g)));
    CHECK(iso_interior(g).is_subset_of(iso_bundle(g)));
    CHECK((gz.arrows == iso_interior(g)) == oracle::is_cryptic(s));
    CHECK(is_effective(g) == is_essentially_principal(g));
    if (is_clifford(s)) CHECK(is_group_bundle(g));
  }
}

TEST_CASE("fibre groups are the maximal subgroups") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const auto u = universal_groupoid(c.semigroup);
    const auto& fs = *u.action.filters;
    for (Index p = 0; p < u.action.space_size; ++p) {
      const Index e = fs.semilattice.parent_index(fs.points[p].generator);
      const auto fiber = fiber_group(*u.groupoid, u.germs.unit_at(p));
      CHECK(fiber.order() == maximal_subgroup(s, e).count());
    }
  }
}

TEST_CASE("convolution algebra identities on random functions") {
  std::mt19937_64 rng(17);
  for (const auto& c : corpus()) {
    const auto g = universal_groupoid(c.semigroup).groupoid;
    for (int k = 0; k < 3; ++k) {
      const auto a = random_integer_function(g, rng), b = random_integer_function(g, rng),
                 d = random_integer_function(g, rng);
      CHECK(max_abs_difference(convolve(convolve(a, b), d), convolve(a, convolve(b, d))) == 0.0);
      CHECK(max_abs_difference(convolve(a, b + d), convolve(a, b) + convolve(a, d)) == 0.0);
      CHECK(max_abs_difference(involution(convolve(a, b)), convolve(involution(b), involution(a))) == 0.0);
    }
  }
}

TEST_CASE("a non-normal wide group bundle is rejected") {
  // G(B(Z_2, 2)) is the pair groupoid on two points times Z_2. The units plus
  // the isotropy at one point form a wide group bundle that conjugation moves.
  auto s = std::make_shared<const InverseSemigroup>(builtin("brandt:2:2"));
  const auto u = universal_groupoid(s);
  const auto& g = *u.groupoid;
  REQUIRE(g.units().count() == 2);
  const Index u0 = g.unit_list()[0];
  ElementSet h = g.units();
  for (Index a : isotropy_at(g, u0).to_vector()) h.insert(a);
  const auto props = subgroupoid_properties(g, h);
  REQUIRE(props.is_subgroupoid);
  REQUIRE(props.wide);
  CHECK_FALSE(props.normal);
  try {
    make_inclusion(u.groupoid, h);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kHypothesisFailed);
    CHECK(std::string(e.what()).find("normal") != std::string::npos);
  }
}

TEST_CASE("reports render deterministically") {
  for (const char* name : {"diamond_munn", "b2"}) {
    auto s = std::make_shared<const InverseSemigroup>(builtin(name));
    const auto a = run_suite(name, s, Suite::kAll, {10, 2}).render();
    const auto b = run_suite(name, s, Suite::kAll, {10, 2}).render();
    CHECK(a == b);
  }
  const auto r = run_suite("diamond_munn", std::make_shared<const InverseSemigroup>(builtin("diamond_munn")),
                           Suite::kUniversal);
  const auto* check = r.find("cryptic_isotropy_interior");
  REQUIRE(check);
  CHECK(check->pass);
  CHECK(check->witness.find("[-1,") != std::string::npos);
}

TEST_CASE("every check belongs to exactly one suite") {
  auto s = std::make_shared<const InverseSemigroup>(builtin("b2"));
  std::vector<std::string> names;
  for (Suite suite : {Suite::kUniversal, Suite::kTight, Suite::kExtension, Suite::kAlgebra})
    for (const auto& c : run_suite("b2", s, suite, {5, 1}).checks) names.push_back(c.name);
  const auto all = run_suite("b2", s, Suite::kAll, {5, 1});
  REQUIRE(all.checks.size() == names.size());
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
