#include <doctest.h>

#include <memory>

#include "isg/action.hpp"
#include "isg/builtins.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

std::shared_ptr<const InverseSemigroup> share(InverseSemigroup s) {
  return std::make_shared<const InverseSemigroup>(std::move(s));
}

ErrorKind action_error(std::shared_ptr<const InverseSemigroup> s, std::size_t m, std::vector<PartialMap> maps) {
  try {
    validate_action(std::move(s), m, std::move(maps));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("action accepted");
  return ErrorKind::kInvariantViolation;
}

}  // namespace

TEST_CASE("universal groupoid size matches germ enumeration") {
  for (const auto& c : corpus()) {
    const auto u = universal_groupoid(c.semigroup);
    CHECK_MESSAGE(u.groupoid->size() == oracle::universal_germ_count(*c.semigroup), c.name);
    CHECK(u.groupoid->units().count() == u.action.space_size);
  }
}

TEST_CASE("beta acts on principal filters by conjugating generators") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const Action a = universal_action(c.semigroup);
    const auto& fs = *a.filters;
    for (Index t = 0; t < s.size(); ++t)
      for (Index p = 0; p < a.space_size; ++p) {
        const Index gen = fs.semilattice.parent_index(fs.points[p].generator);
        const bool in = natural_leq(s, gen, s.source_idempotent(t));
        REQUIRE(a.maps[t].defined(p) == in);
        if (!in) continue;
        const Index image = a.maps[t](p);
        CHECK(fs.semilattice.parent_index(fs.points[image].generator) == s.mul(s.mul(t, gen), s.inv(t)));
      }
  }
}

TEST_CASE("natural action of I_2 gives the pair groupoid") {
  auto i2 = symmetric_inverse_monoid(2);
  auto s = share(i2.semigroup);
  const Action a = validate_action(s, 2, i2.maps);
  CHECK(domains_form_base(a));
  CHECK(action_kernel(a) == idempotents(*s));
  const auto g = germ_groupoid(a);
  CHECK(g.groupoid.size() == 4);
  CHECK(groupoid_isomorphic(g.groupoid, pair_groupoid(2)).has_value());
  CHECK(is_effective(g.groupoid));
  CHECK(is_essentially_principal(g.groupoid));
}

TEST_CASE("tight groupoid of b2 is the pair groupoid on the atoms") {
  const Action t = tight_action(share(builtin("b2")));
  CHECK(t.space_size == 2);
  const auto g = germ_groupoid(t);
  CHECK(groupoid_isomorphic(g.groupoid, pair_groupoid(2)).has_value());
}

TEST_CASE("action validation") {
  auto z2 = share(builtin("group:cyclic:2"));
  const PartialMap id({0, 1}), swap({1, 0}), half({0, -1});
  CHECK(action_error(z2, 2, {id, id, id}) == ErrorKind::kNotHomomorphism);
  CHECK(action_error(z2, 2, {swap, swap}) == ErrorKind::kNotHomomorphism);
  CHECK(action_error(z2, 2, {PartialMap({0, 0}), PartialMap({0, 0})}) == ErrorKind::kNotHomomorphism);
  CHECK(action_error(z2, 2, {PartialMap({0, 5}), PartialMap({0, 5})}) == ErrorKind::kNotHomomorphism);
  CHECK(action_error(z2, 2, {half, half}) == ErrorKind::kNotCovering);
  const Action ok = validate_action(z2, 2, {id, swap});
  CHECK(germ_groupoid(ok).groupoid.size() == 4);
}

TEST_CASE("germ composition and inversion follow the defining formulas") {
  for (const char* name : {"diamond_munn", "b2", "symmetric:2", "brandt:2:2"}) {
    const auto u = universal_groupoid(share(builtin(name)));
    const auto& s = *u.semigroup;
    const auto& g = *u.groupoid;
    for (Index t = 0; t < s.size(); ++t)
      for (Index x = 0; x < u.action.space_size; ++x) {
        const Index arrow = u.germs.arrow_of(t, x);
        if (arrow == FiniteGroupoid::kNone) continue;
        const Index y = u.action.maps[t](x);
        CHECK(g.inv(arrow) == u.germs.arrow_of(s.inv(t), y));
        CHECK(g.d(arrow) == u.germs.unit_at(x));
        CHECK(g.r(arrow) == u.germs.unit_at(y));
        for (Index v = 0; v < s.size(); ++v) {
          const Index next = u.germs.arrow_of(v, y);
          if (next == FiniteGroupoid::kNone) continue;
          CHECK(g.compose(next, arrow) == u.germs.arrow_of(s.mul(v, t), x));
        }
      }
  }
}

TEST_CASE("induced subgroupoid needs an inverse subsemigroup containing E") {
  auto s = share(builtin("diamond_munn"));
  const auto u = universal_groupoid(s);
  ElementSet bad(s->size(), {*s->find("a>b")});
  try {
    induced_subgroupoid(u.action, u.germs, bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotSubsemigroup);
  }
  const auto all = induced_subgroupoid(u.action, u.germs, ElementSet::full(s->size()));
  CHECK(all.arrows.count() == u.groupoid->size());
}

TEST_CASE("graph inverse semigroups") {
  CHECK(builtin("graph:path:2").size() == 6);
  const auto g = graph_inverse_semigroup(parallel_graph(2));
  CHECK(g.semigroup.size() == 11);
  CHECK(g.semigroup.zero() == Index{0});
  for (Index a = 1; a < g.semigroup.size(); ++a) {
    const auto& [x, y] = g.elements[a];
    // xy* is idempotent exactly when x = y.
    CHECK(g.semigroup.is_idempotent(a) == (x.edges == y.edges && x.vertex == y.vertex));
  }
  try {
    graph_inverse_semigroup(DirectedGraph{1, {{0, 0}}});
    FAIL("accepted a loop");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCyclicGraph);
  }
}
