#include <doctest.h>

#include <set>

#include "isg/builtins.hpp"
#include "isg/semilattice.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

std::set<std::set<Index>> as_parent_sets(const Semilattice& e, const std::vector<Filter>& fs) {
  std::set<std::set<Index>> out;
  for (const auto& f : fs) {
    std::set<Index> members;
    for (Index x : f.members.to_vector()) members.insert(e.parent_index(x));
    out.insert(members);
  }
  return out;
}

}  // namespace

TEST_CASE("filters agree with subset enumeration and are principal") {
  for (const auto& c : corpus()) {
    const auto& s = *c.semigroup;
    if (oracle::idempotents(s).size() > 16) continue;
    const Semilattice e = semilattice_of(s);
    const auto fs = all_filters(e, FilterEnumeration::kExhaustive);
    const auto expected = oracle::filters(s);
    CHECK(as_parent_sets(e, fs) == std::set<std::set<Index>>(expected.begin(), expected.end()));
    for (const auto& f : fs) {
      CHECK(is_filter(e, f.members));
      CHECK(f.members == e.up_set(f.generator));
    }
    CHECK(as_parent_sets(e, all_filters(e, FilterEnumeration::kPrincipal)) == as_parent_sets(e, fs));
  }
}

TEST_CASE("ultrafilters are the filters of the atoms") {
  for (const auto& c : corpus()) {
    const Semilattice e = semilattice_of(*c.semigroup);
    const auto uf = ultrafilters(e);
    const auto fs = all_filters(e);
    std::size_t maximal = 0;
    for (const auto& f : fs) {
      bool is_max = true;
      for (const auto& g : fs)
        if (!(f == g) && f.members.is_subset_of(g.members)) is_max = false;
      maximal += is_max;
    }
    CHECK(uf.size() == maximal);
    CHECK(uf.size() == e.atoms().size());
    CHECK(as_parent_sets(e, tight_spectrum(e)) == as_parent_sets(e, uf));
  }
}

TEST_CASE("diamond filters") {
  const Semilattice e = diamond_semilattice();
  CHECK(all_filters(e).size() == 3);
  CHECK(ultrafilters(e).size() == 2);
  CHECK(is_zero_disjunctive(e));
}

TEST_CASE("0-disjunctivity") {
  CHECK_FALSE(is_zero_disjunctive(chain_semilattice(3)));
  CHECK(is_zero_disjunctive(chain_semilattice(2)));
  CHECK(is_zero_disjunctive(semilattice_of(builtin("b2"))));
  // A vertex with one incoming edge: the edge's range idempotent cannot be separated.
  CHECK_FALSE(is_zero_disjunctive(semilattice_of(builtin("graph:path:2"))));
  CHECK(is_zero_disjunctive(semilattice_of(builtin("graph:parallel:2"))));
}

TEST_CASE("symmetric inverse monoid counts") {
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(symmetric_inverse_monoid(n).semigroup.size() == oracle::symmetric_inverse_monoid_size(n));
}

TEST_CASE("Munn semigroups are fundamental with the given semilattice") {
  for (const Semilattice& e : {diamond_semilattice(), chain_semilattice(3), chain_semilattice(1)}) {
    const auto m = munn_semigroup(e).semigroup;
    CHECK(semilattice_isomorphism(semilattice_of(m), e).has_value());
  }
  CHECK(munn_semigroup(diamond_semilattice()).semigroup.size() == 7);
  CHECK(munn_semigroup(chain_semilattice(3)).semigroup.size() == 3);
}

TEST_CASE("spectrum basis isolates each principal filter") {
  const Semilattice e = diamond_semilattice();
  const auto fs = all_filters(e);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    bool found = false;
    for (const auto& b : spectrum_basis(e)) found |= b.evaluate(fs) == ElementSet(fs.size(), {static_cast<Index>(k)});
    CHECK(found);
  }
}
