// Acceptance run: one line per criterion with its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isg/algebra.hpp"
#include "isg/builtins.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "isg/report.hpp"

using namespace isg;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

const std::vector<CorpusEntry>& the_corpus() {
  static const std::vector<CorpusEntry> c = corpus();
  return c;
}

Index up_point(const Action& a, Index e) {
  const auto& fs = *a.filters;
  const Index local = fs.semilattice.local_index(e);
  for (Index p = 0; p < fs.points.size(); ++p)
    if (fs.points[p].generator == local) return p;
  return FiniteGroupoid::kNone;
}

Verdict diamond() {
  auto s = std::make_shared<const InverseSemigroup>(builtin("diamond_munn"));
  if (s->size() != 7) return {false, "size " + std::to_string(s->size())};
  if (!semilattice_isomorphism(semilattice_of(*s), diamond_semilattice())) return {false, "E is not the diamond"};
  const Index top = *s->find("1");
  if (maximal_subgroup(*s, top).count() != 2) return {false, "H_1 does not have order 2"};
  if (!(centralizer(*s) == idempotents(*s))) return {false, "Z(E) != E"};
  const auto u = universal_groupoid(s);
  const auto gz = induced_subgroupoid(u.action, u.germs, centralizer(*s));
  if (gz.arrows.count() != 3 || !(gz.arrows == u.groupoid->units())) return {false, "G(Z) is not 3 units"};
  const Index swap = u.germs.arrow_of(*s->find("-1"), up_point(u.action, top));
  const ElementSet extra = iso_interior(*u.groupoid) - gz.arrows;
  if (swap == FiniteGroupoid::kNone || !extra.contains(swap) || extra.count() != 1)
    return {false, "swap germ is not the unique element of Iso° \\ G(Z)"};
  return {true, "7 elements, |H_1| = 2, G(Z) = 3 units, witness " + u.groupoid->label(swap)};
}

Verdict cryptic() {
  if (the_corpus().size() < 20) return {false, "corpus too small"};
  std::size_t yes = 0, no = 0;
  for (const auto& c : the_corpus()) {
    const auto u = universal_groupoid(c.semigroup);
    const auto gz = induced_subgroupoid(u.action, u.germs, centralizer(*c.semigroup));
    const ElementSet extra = iso_interior(*u.groupoid) - gz.arrows;
    if (!gz.arrows.is_subset_of(iso_interior(*u.groupoid))) return {false, c.name + ": G(Z) not inside Iso°"};
    if (is_cryptic(*c.semigroup)) {
      if (!extra.empty()) return {false, c.name + ": cryptic but G(Z) != Iso°"};
      ++yes;
    } else {
      if (extra.empty()) return {false, c.name + ": no witness in Iso° \\ G(Z)"};
      ++no;
    }
  }
  return {yes > 0 && no > 0, std::to_string(the_corpus().size()) + " semigroups, " + std::to_string(yes) +
                                 " cryptic, " + std::to_string(no) + " with witnesses"};
}

Verdict fibres() {
  std::size_t count = 0;
  for (const auto& c : the_corpus()) {
    const auto& s = *c.semigroup;
    const auto u = universal_groupoid(c.semigroup);
    for (Index e : idempotents(s).to_vector()) {
      if (s.zero() && *s.zero() == e) continue;
      const FiniteGroup fiber = fiber_group(*u.groupoid, u.germs.unit_at(up_point(u.action, e)));
      const auto iso = groupoid_isomorphic(fiber.groupoid(), group_groupoid(s, maximal_subgroup(s, e)));
      if (!iso) return {false, c.name + ": no certificate at " + s.label(e)};
      ++count;
    }
  }
  return {true, std::to_string(count) + " certificates"};
}

Verdict kernels() {
  std::size_t zd = 0;
  for (const auto& c : the_corpus()) {
    const auto& s = *c.semigroup;
    const ElementSet z = centralizer(s);
    const auto u = universal_groupoid(c.semigroup);
    if (!(action_kernel(u.action) == z)) return {false, c.name + ": J(beta) != Z(E)"};
    if (!s.has_zero() || !is_zero_disjunctive(semilattice_of(s))) continue;
    ++zd;
    const Action theta = tight_action(c.semigroup);
    const auto es = idempotents(s).to_vector();
    for (Index a : es)
      for (Index b : es)
        if (a < b && theta.domain(a) == theta.domain(b)) return {false, c.name + ": e -> D_e not injective"};
    const auto g = germ_groupoid(theta);
    if (!(induced_subgroupoid(theta, g, z).arrows == iso_interior(g.groupoid)))
      return {false, c.name + ": G_theta(Z) != Iso°"};
  }
  for (std::size_t n = 2; n <= 4; ++n)
    if (is_zero_disjunctive(semilattice_of(builtin("graph:path:" + std::to_string(n)))))
      return {false, "graph:path:" + std::to_string(n) + " reported 0-disjunctive"};
  if (!is_zero_disjunctive(semilattice_of(builtin("graph:parallel:2")))) return {false, "graph:parallel:2 not 0-disjunctive"};
  return {zd > 0, std::to_string(zd) + " 0-disjunctive semigroups, path graphs rejected"};
}

Verdict dichotomy_for(const std::string& name, const Action& a, std::size_t& bases) {
  const auto g = germ_groupoid(a);
  const auto gj = induced_subgroupoid(a, g, action_kernel(a));
  const auto& G = g.groupoid;
  if (!gj.arrows.is_subset_of(iso_bundle(G))) return {false, name + ": G(J) not inside Iso"};
  if (!is_open(G, gj.arrows)) return {false, name + ": G(J) not open"};
  if (domains_form_base(a)) {
    ++bases;
    if (!(gj.arrows == iso_interior(G))) return {false, name + ": base but G(J) != Iso°"};
  }
  return {true, ""};
}

Verdict dichotomy() {
  std::size_t bases = 0, actions = 0;
  for (const auto& c : the_corpus()) {
    for (const Action& a : {universal_action(c.semigroup), tight_action(c.semigroup)}) {
      const Verdict v = dichotomy_for(c.name, a, bases);
      if (!v.pass) return v;
      ++actions;
    }
  }
  return {true, std::to_string(actions) + " actions, " + std::to_string(bases) + " with a base of domains"};
}

Verdict suite_checks(Suite suite, const std::vector<std::string>& names, std::size_t samples = 100) {
  std::size_t total = 0;
  for (const auto& c : the_corpus()) {
    const auto report = run_suite(c.name, c.semigroup, suite, {samples, 0x15c0ffee});
    for (const auto& n : names) {
      const CheckResult* r = report.find(n);
      if (!r) return {false, c.name + ": " + n + " missing"};
      if (!r->pass) return {false, c.name + ": " + n + " (" + r->witness + ")"};
      ++total;
    }
  }
  return {true, std::to_string(total) + " checks"};
}

Verdict extension() {
  const Verdict v = suite_checks(Suite::kExtension, {"mu_projection_strongly_surjective",
                                                     "kernel_phi_is_centralizer_groupoid",
                                                     "split_semidirect_decomposition"});
  if (!v.pass) return v;
  std::size_t split = 0;
  for (const auto& c : the_corpus()) {
    std::optional<std::vector<Index>> r;
    try {
      r = find_split_transversal(*c.semigroup);
    } catch (const Error&) {
      continue;
    }
    if (!r) continue;
    const auto check = split_iso_check(c.semigroup, *r);
    if (!check.ok) return {false, c.name + ": certificate fails"};
    ++split;
  }
  return {split > 0, v.detail + ", " + std::to_string(split) + " split certificates"};
}

Verdict cocycle() {
  std::size_t count = 0;
  for (const auto& c : the_corpus()) {
    if (c.semigroup->has_zero() || !is_e_unitary(*c.semigroup)) continue;
    const auto sc = sigma_cocycle(c.semigroup);
    if (!(kernel(sc.hom) == sc.hom.source->units())) return {false, c.name + ": ker c != units"};
    ++count;
  }
  return {count > 0, std::to_string(count) + " zero-free E-unitary semigroups"};
}

Verdict algebra() {
  return suite_checks(Suite::kAlgebra, {"embedding_hypotheses", "embed_isometric_star_homomorphism",
                                        "conditional_expectation_identities", "conditional_expectation_faithful",
                                        "c_star_identity"});
}

Verdict effective() {
  std::size_t count = 0;
  for (const auto& c : the_corpus())
    for (const Action& a : {universal_action(c.semigroup), tight_action(c.semigroup)}) {
      const auto g = germ_groupoid(a);
      if (is_effective(g.groupoid) != is_essentially_principal(g.groupoid)) return {false, c.name};
      ++count;
    }
  return {true, std::to_string(count) + " groupoids"};
}

std::string full_run() {
  std::string out;
  for (const auto& c : the_corpus()) {
    const auto r = run_suite(c.name, c.semigroup, Suite::kAll);
    out += r.render() + r.norm_csv;
  }
  return out;
}

Verdict determinism() {
  const std::string a = full_run(), b = full_run();
  return {a == b, std::to_string(a.size()) + " bytes per run"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds, 0 for none
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "diamond example", 1, diamond},
      {2, "cryptic equality", 10, cryptic},
      {3, "isotropy fibres", 10, fibres},
      {4, "kernels and 0-disjunctivity", 10, kernels},
      {5, "base dichotomy", 10, dichotomy},
      {6, "extension", 30, extension},
      {7, "cocycle", 5, cocycle},
      {8, "algebra", 60, algebra},
      {9, "essentially principal iff effective", 5, effective},
      {10, "determinism", 0, determinism},
  };
  (void)the_corpus();
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit == 0 || secs < c.limit;
    const bool ok = v.pass && in_time;
    failures += !ok;
    std::printf("%s criterion %d: %s: %.3f s", ok ? "PASS" : "FAIL", c.id, c.title, secs);
    if (c.limit > 0) std::printf(" (limit %.0f s)", c.limit);
    std::printf(": %s%s\n", v.detail.c_str(), in_time ? "" : " [time limit exceeded]");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
