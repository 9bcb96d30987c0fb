#include <doctest.h>

#include "isg/builtins.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "oracles.hpp"

using namespace isg;

TEST_CASE("mu agrees with its definition and sits inside H") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const Relation mu = mu_relation(s);
    CHECK(is_congruence(s, mu));
    CHECK(is_idempotent_separating(s, mu));
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b) {
        CHECK(mu.related(a, b) == oracle::mu_related(s, a, b));
        if (mu.related(a, b)) CHECK(oracle::h_related(s, a, b));
      }
    CHECK(is_cryptic(s) == oracle::is_cryptic(s));
  }
}

TEST_CASE("kernel of mu is the centralizer") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    CHECK(kernel_of(s, mu_relation(s)) == centralizer(s));
  }
}

TEST_CASE("S/mu is fundamental with the same semilattice") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const auto q = munn_quotient(s);
    CHECK(is_fundamental(q.target));
    CHECK(semilattice_isomorphism(semilattice_of(s), semilattice_of(q.target)).has_value());
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b)
        CHECK(q.projection[s.mul(a, b)] == q.target.mul(q.projection[a], q.projection[b]));
  }
}

TEST_CASE("mu is the largest idempotent-separating congruence") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const Relation mu = mu_relation(s);
    for (const auto& r : random_idempotent_separating_congruences(s, 8, 7)) {
      CHECK(is_congruence(s, r));
      CHECK(is_idempotent_separating(s, r));
      CHECK(r.refines(mu));
    }
  }
}

TEST_CASE("non-congruences are rejected") {
  const auto s = builtin("b2");
  const Relation r = Relation::from_blocks(5, {{0}, {1, 2}, {3}, {4}});
  CHECK_FALSE(is_congruence(s, r));
  try {
    quotient(s, r);
    FAIL("quotient by a non-congruence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotACongruence);
  }
}

TEST_CASE("sigma gives the maximal group image") {
  CHECK(sigma_and_group_image(builtin("group:cyclic:3")).image.target.size() == 3);
  CHECK(sigma_and_group_image(builtin("clifford_chain:identity")).image.target.size() == 2);
  CHECK(sigma_and_group_image(builtin("b2")).image.target.size() == 1);
}

TEST_CASE("congruence closure") {
  const auto s = builtin("group:cyclic:4");
  const Relation r = congruence_closure(s, {{0, 2}});
  CHECK(is_congruence(s, r));
  CHECK(r.block_count() == 2);
}

TEST_CASE("split transversals are homomorphic sections") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    const auto q = munn_quotient(s);
    const auto r = find_split_transversal(s, q);
    if (!r) continue;
    for (Index x = 0; x < q.target.size(); ++x) {
      CHECK(q.projection[(*r)[x]] == x);
      for (Index y = 0; y < q.target.size(); ++y) CHECK((*r)[q.target.mul(x, y)] == s.mul((*r)[x], (*r)[y]));
    }
  }
  // The diamond example is fundamental, so the identity splits it.
  CHECK(find_split_transversal(builtin("diamond_munn")).has_value());
}
