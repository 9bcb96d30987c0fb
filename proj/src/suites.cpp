#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "isg/algebra.hpp"
#include "isg/congruence.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"
#include "isg/report.hpp"

namespace isg {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t VerificationReport::failed() const { return checks.size() - passed(); }

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  out << "subject: " << subject << "\n";
  out << "suite: " << suite << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    out << "       " << c.anchor << "\n";
    if (!c.witness.empty()) out << "       witness: " << c.witness << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << "summary: " << passed() << " passed, " << failed() << " failed, " << checks.size() << " total\n";
  return out.str();
}

Suite parse_suite(std::string_view name) {
  if (name == "universal") return Suite::kUniversal;
  if (name == "tight") return Suite::kTight;
  if (name == "extension") return Suite::kExtension;
  if (name == "algebra") return Suite::kAlgebra;
  if (name == "all") return Suite::kAll;
  throw Error(ErrorKind::kUnknownName, "unknown suite: " + std::string(name));
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kUniversal: return "universal";
    case Suite::kTight: return "tight";
    case Suite::kExtension: return "extension";
    case Suite::kAlgebra: return "algebra";
    case Suite::kAll: return "all";
  }
  return "?";
}

namespace {

struct Outcome {
  bool pass;
  std::string witness;
};

std::string arrow_list(const FiniteGroupoid& g, const ElementSet& set, std::size_t limit = 6) {
  std::string out = "{";
  std::size_t k = 0;
  for (Index a : set.to_vector()) {
    if (k == limit) {
      out += ",...";
      break;
    }
    out += (k++ ? "," : "") + g.label(a);
  }
  return out + "}";
}

std::string element_list(const InverseSemigroup& s, const std::vector<Index>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + s.label(xs[k]);
  return out;
}

class Runner {
 public:
  Runner(VerificationReport& report, std::shared_ptr<const InverseSemigroup> s, const SuiteOptions& options)
      : report_(report), sp_(std::move(s)), s_(*sp_), options_(options) {}

  void universal();
  void tight();
  void extension();
  void algebra();

 private:
  void check(const std::string& name, const std::string& anchor, const std::function<Outcome()>& body) {
    CheckResult r{name, anchor, false, {}};
    try {
      const Outcome o = body();
      r.pass = o.pass;
      r.witness = o.witness;
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  const ElementSet& e() {
    if (!e_) e_ = idempotents(s_);
    return *e_;
  }
  const ElementSet& z() {
    if (!z_) z_ = centralizer(s_);
    return *z_;
  }
  const Relation& mu() {
    if (!mu_) mu_ = mu_relation(s_);
    return *mu_;
  }
  UniversalGroupoid& u() {
    if (!u_) u_ = universal_groupoid(sp_);
    return *u_;
  }
  const Subgroupoid& gz() {
    if (!gz_) gz_ = induced_subgroupoid(u().action, u().germs, z());
    return *gz_;
  }
  // The point of the universal action at the principal filter of idempotent e.
  Index up_point(const Action& a, Index e) {
    const auto& fs = *a.filters;
    const Index local = fs.semilattice.local_index(e);
    for (Index p = 0; p < fs.points.size(); ++p)
      if (fs.points[p].generator == local) return p;
    return FiniteGroupoid::kNone;
  }

  void base_dichotomy(const std::string& name, const Action& a, const GermGroupoid& g);
  void effective_check(const std::string& name, const FiniteGroupoid& g);

  VerificationReport& report_;
  std::shared_ptr<const InverseSemigroup> sp_;
  const InverseSemigroup& s_;
  const SuiteOptions& options_;
  std::optional<ElementSet> e_, z_;
  std::optional<Relation> mu_;
  std::optional<UniversalGroupoid> u_;
  std::optional<Subgroupoid> gz_;
};

void Runner::base_dichotomy(const std::string& name, const Action& a, const GermGroupoid& g) {
  check(name, "G(J) is open and inside Iso; G(J) = Iso° when the domains D_e form a base", [&]() -> Outcome {
    const ElementSet j = action_kernel(a);
    const auto gj = induced_subgroupoid(a, g, j);
    const auto& G = g.groupoid;
    const ElementSet iso = iso_bundle(G), iso_int = iso_interior(G);
    if (!gj.arrows.is_subset_of(iso)) return {false, "outside Iso: " + arrow_list(G, gj.arrows - iso)};
    if (!is_open(G, gj.arrows)) return {false, "G(J) not open: " + arrow_list(G, gj.arrows - interior(G, gj.arrows))};
    const bool base = domains_form_base(a);
    if (base && !(gj.arrows == iso_int))
      return {false, "Iso° \\ G(J) = " + arrow_list(G, iso_int - gj.arrows)};
    return {true, std::string("domains form a base: ") + (base ? "yes" : "no") + ", |G(J)| = " +
                      std::to_string(gj.arrows.count()) + ", |Iso°| = " + std::to_string(iso_int.count())};
  });
}

void Runner::effective_check(const std::string& name, const FiniteGroupoid& g) {
  check(name, "essentially principal iff effective (finite, hence Hausdorff)", [&]() -> Outcome {
    const bool ep = is_essentially_principal(g), eff = is_effective(g);
    std::string w = std::string("essentially principal: ") + (ep ? "yes" : "no") + ", effective: " + (eff ? "yes" : "no");
    return {ep == eff, w};
  });
}

void Runner::universal() {
  const std::size_t n = s_.size();
  check("natural_order_partial_order", "s <= t iff s = te for an idempotent e is a partial order", [&]() -> Outcome {
    std::vector<unsigned char> leq(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) leq[a * n + b] = natural_leq(s_, a, b);
    for (Index a = 0; a < n; ++a) {
      if (!leq[a * n + a]) return {false, "not reflexive at " + s_.label(a)};
      for (Index b = 0; b < n; ++b) {
        if (a != b && leq[a * n + b] && leq[b * n + a]) return {false, "not antisymmetric: " + element_list(s_, {a, b})};
        for (Index c = 0; c < n; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c])
            return {false, "not transitive: " + element_list(s_, {a, b, c})};
      }
    }
    return {true, ""};
  });
  check("idempotents_commutative_subsemigroup", "E(S) is a commutative subsemigroup", [&]() -> Outcome {
    for (Index a : e().to_vector())
      for (Index b : e().to_vector()) {
        if (!e().contains(s_.mul(a, b))) return {false, "product leaves E: " + element_list(s_, {a, b})};
        if (s_.mul(a, b) != s_.mul(b, a)) return {false, "idempotents do not commute: " + element_list(s_, {a, b})};
      }
    return {true, "|E| = " + std::to_string(e().count())};
  });
  check("maximal_subgroups_are_groups", "H_e is a group with identity e", [&]() -> Outcome {
    for (Index x : e().to_vector()) {
      const ElementSet h = maximal_subgroup(s_, x);
      for (Index a : h.to_vector()) {
        if (s_.mul(a, x) != a || s_.mul(x, a) != a || s_.mul(a, s_.inv(a)) != x || !h.contains(s_.inv(a)))
          return {false, "H_" + s_.label(x) + " fails at " + s_.label(a)};
        for (Index b : h.to_vector())
          if (!h.contains(s_.mul(a, b))) return {false, "H_" + s_.label(x) + " not closed: " + element_list(s_, {a, b})};
      }
    }
    return {true, ""};
  });
  check("centralizer_normal", "E <= Z(E) and s* Z s <= Z", [&]() -> Outcome {
    if (!e().is_subset_of(z())) return {false, "idempotent outside Z"};
    if (!is_normal_subsemigroup(s_, z())) return {false, "Z is not normal"};
    return {true, "|Z| = " + std::to_string(z().count())};
  });
  check("clifford_iff_centralizer_full", "S is Clifford iff Z(E) = S", [&]() -> Outcome {
    const bool cl = is_clifford(s_), full = z().count() == n;
    return {cl == full, std::string("Clifford: ") + (cl ? "yes" : "no")};
  });
  check("mu_within_h", "mu is contained in H", [&]() -> Outcome {
    return {mu().refines(h_classes(s_)), std::to_string(mu().block_count()) + " mu-classes"};
  });
  check("mu_maximal_idempotent_separating", "every idempotent-separating congruence is inside mu", [&]() -> Outcome {
    const auto rs = random_idempotent_separating_congruences(s_, 8, options_.seed);
    for (std::size_t k = 0; k < rs.size(); ++k) {
      if (!is_congruence(s_, rs[k]) || !is_idempotent_separating(s_, rs[k]))
        return {false, "generator produced a bad congruence #" + std::to_string(k)};
      if (!rs[k].refines(mu())) return {false, "congruence #" + std::to_string(k) + " not inside mu"};
    }
    return {true, std::to_string(rs.size()) + " sampled congruences"};
  });
  check("kernel_mu_is_centralizer", "the union of mu-classes of idempotents is Z(E)", [&]() -> Outcome {
    const ElementSet k = kernel_of(s_, mu());
    return {k == z(), "|Ker mu| = " + std::to_string(k.count())};
  });
  check("munn_quotient_fundamental", "S/mu is fundamental", [&]() -> Outcome {
    const auto q = munn_quotient(s_);
    return {is_fundamental(q.target), "|S/mu| = " + std::to_string(q.target.size())};
  });
  check("filters_principal", "filters are upward and meet closed, zero free, and all principal", [&]() -> Outcome {
    const Semilattice sl = semilattice_of(s_);
    const auto fs = all_filters(sl);
    for (const auto& f : fs)
      if (!is_filter(sl, f.members) || !(f.members == sl.up_set(f.generator)))
        return {false, "bad filter at " + sl.label(f.generator)};
    const auto principal = all_filters(sl, FilterEnumeration::kPrincipal);
    if (fs.size() != principal.size()) return {false, "filter count differs from principal count"};
    for (std::size_t k = 0; k < fs.size(); ++k)
      if (!(fs[k] == principal[k])) return {false, "filter differs at generator " + sl.label(fs[k].generator)};
    return {true, std::to_string(fs.size()) + " filters"};
  });
  check("munn_semigroup_of_e", "T_E is fundamental with semilattice isomorphic to E", [&]() -> Outcome {
    const Semilattice sl = semilattice_of(s_);
    const auto t = munn_semigroup(sl);
    const auto iso = semilattice_isomorphism(semilattice_of(t.semigroup), sl);
    return {iso.has_value() && is_fundamental(t.semigroup), "|T_E| = " + std::to_string(t.semigroup.size())};
  });
  check("symmetric_inverse_monoid_counts", "|I_n| = sum_k C(n,k)^2 k! for n <= 4", [&]() -> Outcome {
    const std::size_t expected[] = {0, 2, 7, 34, 209};
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto m = symmetric_inverse_monoid(k);
      if (m.semigroup.size() != expected[k]) return {false, "n = " + std::to_string(k)};
    }
    return {true, "2, 7, 34, 209"};
  });
  check("universal_domains", "beta_s is defined exactly on filters containing s*s", [&]() -> Outcome {
    const auto& a = u().action;
    const auto& fs = *a.filters;
    for (Index x = 0; x < n; ++x)
      for (Index p = 0; p < a.space_size; ++p) {
        const bool in = fs.points[p].members.contains(fs.semilattice.local_index(s_.source_idempotent(x)));
        if (in != a.maps[x].defined(p)) return {false, "beta_" + s_.label(x) + " at " + a.point_names[p]};
      }
    return {true, std::to_string(a.space_size) + " filters, " + std::to_string(u().groupoid->size()) + " germs"};
  });
  check("idempotent_germs_are_units", "germs of idempotents form the unit space", [&]() -> Outcome {
    const auto sub = induced_subgroupoid(u().action, u().germs, e());
    return {sub.arrows == u().groupoid->units(), arrow_list(*u().groupoid, sub.arrows)};
  });
  check("clifford_group_bundle", "S Clifford implies G(S) is a group bundle", [&]() -> Outcome {
    if (!is_clifford(s_)) return {true, "not Clifford"};
    const ElementSet off = u().groupoid->units().complement() - iso_bundle(*u().groupoid);
    return {off.empty(), off.empty() ? "" : "r != d at " + arrow_list(*u().groupoid, off)};
  });
  check("beta_kernel_is_centralizer", "J for beta equals Z(E)", [&]() -> Outcome {
    const ElementSet j = action_kernel(u().action);
    return {j == z(), "|J| = " + std::to_string(j.count())};
  });
  effective_check("effective_iff_essentially_principal", *u().groupoid);
  check("isotropy_fibres", "the isotropy group at the principal filter of e is isomorphic to H_e", [&]() -> Outcome {
    const auto& G = *u().groupoid;
    for (Index x : e().to_vector()) {
      if (s_.zero() && *s_.zero() == x) continue;
      const Index p = up_point(u().action, x);
      const FiniteGroup fiber = fiber_group(G, u().germs.unit_at(p));
      const FiniteGroupoid h = group_groupoid(s_, maximal_subgroup(s_, x));
      if (!groupoid_isomorphic(fiber.groupoid(), h)) return {false, "no isomorphism at e = " + s_.label(x)};
    }
    return {true, "certificates found for every nonzero idempotent"};
  });
  check("containment_chain", "G(Z) <= Iso° <= Iso with fibres Z_e and H_e", [&]() -> Outcome {
    const auto& G = *u().groupoid;
    const ElementSet iso = iso_bundle(G), interior = iso_interior(G);
    if (!gz().arrows.is_subset_of(interior)) return {false, "G(Z) \\ Iso° = " + arrow_list(G, gz().arrows - interior)};
    if (!interior.is_subset_of(iso)) return {false, "Iso° not inside Iso"};
    for (Index x : e().to_vector()) {
      if (s_.zero() && *s_.zero() == x) continue;
      const Index unit = u().germs.unit_at(up_point(u().action, x));
      const ElementSet fib = isotropy_at(G, unit);
      std::size_t ze = 0;
      for (Index y : mu().block(mu().block_of(x))) ze += z().contains(y);
      if (fib.count() != maximal_subgroup(s_, x).count() || (fib & gz().arrows).count() != ze)
        return {false, "fibre sizes differ at e = " + s_.label(x)};
    }
    return {true, "|G(Z)| = " + std::to_string(gz().arrows.count()) + ", |Iso°| = " + std::to_string(interior.count()) +
                      ", |Iso| = " + std::to_string(iso.count())};
  });
  check("cryptic_isotropy_interior", "mu = H implies G(Z) = Iso°; otherwise Iso° \\ G(Z) has a witness", [&]() -> Outcome {
    const auto& G = *u().groupoid;
    const ElementSet interior = iso_interior(G);
    const ElementSet extra = interior - gz().arrows;
    if (is_cryptic(s_)) return {extra.empty(), extra.empty() ? "cryptic, G(Z) = Iso°" : arrow_list(G, extra)};
    if (extra.empty()) return {false, "not cryptic but G(Z) = Iso°"};
    return {true, "not cryptic, G(Z) properly inside Iso°, witness " + G.label(static_cast<Index>(extra.first()))};
  });
  check("centralizer_groupoid_open_wide_normal", "G(Z) is open, wide and normal; closed when S is fundamental",
        [&]() -> Outcome {
          const auto p = subgroupoid_properties(*u().groupoid, gz().arrows);
          if (!p.is_subgroupoid || !p.open || !p.wide || !p.normal) return {false, "property fails"};
          if (is_fundamental(s_) && !p.closed) return {false, "fundamental but G(Z) not closed"};
          return {true, ""};
        });
  base_dichotomy("base_dichotomy_universal", u().action, u().germs);
}

void Runner::tight() {
  const Action theta = tight_action(sp_);
  const GermGroupoid g = germ_groupoid(theta);
  const Semilattice sl = semilattice_of(s_);
  check("tight_spectrum_is_ultrafilters", "the tight spectrum is the set of ultrafilters, the atoms' filters",
        [&]() -> Outcome {
          const auto ts = tight_spectrum(sl);
          const auto atoms = sl.atoms();
          if (ts.size() != atoms.size()) return {false, "size mismatch"};
          for (std::size_t k = 0; k < ts.size(); ++k)
            if (!(ts[k].members == sl.up_set(atoms[k]))) return {false, "differs at " + sl.label(atoms[k])};
          return {true, std::to_string(ts.size()) + " ultrafilters"};
        });
  check("tight_restricts_universal", "theta is beta restricted to an invariant subspace", [&]() -> Outcome {
    const auto& beta = u().action;
    std::vector<Index> into(theta.space_size);
    for (Index p = 0; p < theta.space_size; ++p) into[p] = up_point(beta, sl.parent_index(theta.filters->points[p].generator));
    for (Index x = 0; x < s_.size(); ++x)
      for (Index p = 0; p < theta.space_size; ++p) {
        const bool def = theta.maps[x].defined(p);
        if (def != beta.maps[x].defined(into[p])) return {false, "domain differs for " + s_.label(x)};
        if (def && static_cast<Index>(beta.maps[x](into[p])) != into[static_cast<Index>(theta.maps[x](p))])
          return {false, "image differs for " + s_.label(x)};
      }
    return {true, ""};
  });
  if (!s_.has_zero()) note("no zero: 0-disjunctivity checks are vacuous");
  const bool zd = s_.has_zero() && is_zero_disjunctive(sl);
  check("zero_disjunctive_domains_injective", "E 0-disjunctive implies e -> D_e of theta is injective", [&]() -> Outcome {
    if (!zd) return {true, "not 0-disjunctive"};
    const auto es = e().to_vector();
    for (Index a : es)
      for (Index b : es)
        if (a < b && theta.domain(a) == theta.domain(b)) return {false, "D_" + s_.label(a) + " = D_" + s_.label(b)};
    return {true, "0-disjunctive"};
  });
  check("zero_disjunctive_tight_kernel", "E 0-disjunctive implies J for theta equals Z(E)", [&]() -> Outcome {
    if (!zd) return {true, "not 0-disjunctive"};
    const ElementSet j = action_kernel(theta);
    return {j == z(), "|J| = " + std::to_string(j.count())};
  });
  check("zero_disjunctive_isotropy_interior",
        "E 0-disjunctive implies G_theta(Z) = Iso(G_theta)°, essentially principal if also fundamental",
        [&]() -> Outcome {
          if (!zd) return {true, "not 0-disjunctive"};
          const auto sub = induced_subgroupoid(theta, g, z());
          const ElementSet interior = iso_interior(g.groupoid);
          if (!(sub.arrows == interior)) return {false, "Iso° \\ G(Z) = " + arrow_list(g.groupoid, interior - sub.arrows)};
          if (is_fundamental(s_) && !is_essentially_principal(g.groupoid)) return {false, "not essentially principal"};
          return {true, ""};
        });
  base_dichotomy("base_dichotomy_tight", theta, g);
  effective_check("effective_iff_essentially_principal_tight", g.groupoid);
}

void Runner::extension() {
  std::optional<MuProjection> phi;
  check("mu_projection_strongly_surjective", "phi([s,F]) = [mu(s),F] maps every d-fibre onto a d-fibre",
        [&]() -> Outcome {
          phi = mu_projection_hom(sp_);
          return {is_strongly_surjective(phi->hom), std::to_string(phi->hom.source->size()) + " -> " +
                                                        std::to_string(phi->hom.target->size()) + " arrows"};
        });
  check("kernel_phi_is_centralizer_groupoid", "ker phi = G(Z) when S/mu is (0-)E-unitary", [&]() -> Outcome {
    if (!phi) return {false, "phi unavailable"};
    const auto& q = phi->munn.target;
    const bool applies = q.has_zero() ? is_zero_e_unitary(q) : is_e_unitary(q);
    const ElementSet ker = kernel(phi->hom);
    if (!applies) return {true, "S/mu is not (0-)E-unitary; |ker phi| = " + std::to_string(ker.count())};
    const ElementSet gza = induced_subgroupoid(phi->source.action, phi->source.germs, z()).arrows;
    return {ker == gza, "|ker phi| = " + std::to_string(ker.count())};
  });
  check("split_semidirect_decomposition", "a splitting r gives G(S) = G(Z) x| G(S/mu)", [&]() -> Outcome {
    std::optional<std::vector<Index>> r;
    try {
      r = find_split_transversal(s_);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kSearchBudgetExceeded) throw;
      return {true, "transversal search budget exceeded"};
    }
    if (!r) return {true, "no split transversal"};
    const auto split = split_iso_check(sp_, *r);
    if (!split.ok) return {false, "certificate is not an isomorphism"};
    std::string w = "certificate on " + std::to_string(split.certificate.size()) + " arrows";
    if (split.product.groupoid.size() <= 64) {
      if (!groupoid_isomorphic(split.product.groupoid, *split.projection.source.groupoid))
        return {false, "isomorphism search disagrees with certificate"};
      w += ", search agrees";
    }
    return {true, w};
  });
  check("sigma_cocycle_kernel", "S E-unitary implies ker c = units", [&]() -> Outcome {
    if (s_.has_zero()) return {true, "S has a zero; the cocycle does not apply"};
    const auto c = sigma_cocycle(sp_);
    const ElementSet ker = kernel(c.hom);
    const bool eu = is_e_unitary(s_);
    if (!eu) return {true, "not E-unitary; |ker c| = " + std::to_string(ker.count())};
    return {ker == c.hom.source->units(), "|sigma(S)| = " + std::to_string(c.hom.target->size())};
  });
}

void Runner::algebra() {
  const auto g = u().groupoid;
  std::optional<Inclusion> inc;
  check("embedding_hypotheses", "G(Z) is an open, closed, wide, normal group bundle", [&]() -> Outcome {
    inc = make_inclusion(g, gz().arrows);
    return {true, ""};
  });
  if (!inc) return;
  std::mt19937_64 rng(options_.seed);
  const std::size_t samples = options_.samples;
  auto rel_close = [](double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };

  check("embed_isometric_star_homomorphism", "iota is a *-homomorphism and an isometry", [&]() -> Outcome {
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      const auto a = random_function(inc->sub, rng), b = random_function(inc->sub, rng);
      const auto ia = embed(*inc, a), ib = embed(*inc, b);
      const double d1 = max_abs_difference(embed(*inc, convolve(a, b)), convolve(ia, ib));
      const double d2 = max_abs_difference(embed(*inc, involution(a)), involution(ia));
      const double na = reduced_norm(a), nia = reduced_norm(ia);
      worst = std::max({worst, d1, d2});
      if (d1 > 1e-9 || d2 > 1e-9 || !rel_close(na, nia, 1e-9))
        return {false, "sample " + std::to_string(k)};
    }
    std::ostringstream w;
    w << samples << " samples";
    return {true, w.str()};
  });
  check("conditional_expectation_identities", "Phi iota = id, Phi is idempotent and an H-bimodule map",
        [&]() -> Outcome {
          for (std::size_t k = 0; k < samples; ++k) {
            const auto a = random_function(inc->sub, rng), b = random_function(inc->sub, rng);
            const auto f = random_function(g, rng);
            if (max_abs_difference(conditional_expectation(*inc, embed(*inc, a)), a) != 0.0)
              return {false, "Phi iota != id, sample " + std::to_string(k)};
            const auto pf = conditional_expectation(*inc, f);
            if (max_abs_difference(conditional_expectation(*inc, embed(*inc, pf)), pf) != 0.0)
              return {false, "Phi not idempotent, sample " + std::to_string(k)};
            const auto lhs = conditional_expectation(*inc, convolve(convolve(embed(*inc, a), f), embed(*inc, b)));
            const auto rhs = convolve(convolve(a, pf), b);
            if (max_abs_difference(lhs, rhs) > 1e-12) return {false, "bimodule identity, sample " + std::to_string(k)};
          }
          return {true, std::to_string(samples) + " samples"};
        });
  check("conditional_expectation_faithful", "Phi(f* f) = 0 only for f = 0", [&]() -> Outcome {
    std::vector<GroupoidFunction> fs{GroupoidFunction::zero(g)};
    for (Index a = 0; a < g->size(); ++a)
      if (!gz().arrows.contains(a)) {
        fs.push_back(GroupoidFunction::delta(g, a));
        break;
      }
    for (std::size_t k = 0; k < samples; ++k) fs.push_back(random_function(g, rng));
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& f = fs[k];
      const auto p = conditional_expectation(*inc, convolve(involution(f), f));
      // At a unit u the coefficient is the sum of |f|^2 over arrows with source u.
      for (std::size_t i = 0; i < inc->to_ambient.size(); ++i) {
        const Index amb = inc->to_ambient[i];
        if (!g->is_unit(amb)) continue;
        double expect = 0.0;
        for (Index c = 0; c < g->size(); ++c)
          if (g->d(c) == amb) expect += std::norm(f.values[c]);
        if (std::abs(p.values[i] - expect) > 1e-12) return {false, "unit coefficient, function " + std::to_string(k)};
      }
      if ((p.max_abs() < 1e-12) != (f.max_abs() < 1e-12)) return {false, "faithfulness, function " + std::to_string(k)};
    }
    return {true, std::to_string(fs.size()) + " functions"};
  });
  std::ostringstream csv;
  csv << "sample,norm_f,norm_fstar_f,norm_f_squared,norm_phi_f\n";
  csv.precision(12);
  check("c_star_identity", "||f* f|| = ||f||^2", [&]() -> Outcome {
    for (std::size_t k = 0; k < samples; ++k) {
      const auto f = random_function(g, rng);
      const double nf = reduced_norm(f);
      const double nff = reduced_norm(convolve(involution(f), f));
      csv << k << ',' << nf << ',' << nff << ',' << nf * nf << ',' << reduced_norm(conditional_expectation(*inc, f)) << '\n';
      if (!rel_close(nff, nf * nf, 1e-9)) return {false, "sample " + std::to_string(k)};
    }
    return {true, std::to_string(samples) + " samples"};
  });
  report_.norm_csv = csv.str();
  check("convolution_associative_exact", "(f g) h = f (g h) exactly on integer functions", [&]() -> Outcome {
    for (std::size_t k = 0; k < 20; ++k) {
      const auto a = random_integer_function(g, rng), b = random_integer_function(g, rng),
                 c = random_integer_function(g, rng);
      if (max_abs_difference(convolve(convolve(a, b), c), convolve(a, convolve(b, c))) != 0.0)
        return {false, "sample " + std::to_string(k)};
    }
    return {true, "20 samples"};
  });
  check("involution_properties", "f** = f and (f g)* = g* f*", [&]() -> Outcome {
    for (std::size_t k = 0; k < 20; ++k) {
      const auto a = random_function(g, rng), b = random_function(g, rng);
      if (max_abs_difference(involution(involution(a)), a) != 0.0) return {false, "f** != f"};
      if (max_abs_difference(involution(convolve(a, b)), convolve(involution(b), involution(a))) > 1e-12)
        return {false, "anti-multiplicativity, sample " + std::to_string(k)};
    }
    return {true, "20 samples"};
  });
  check("regular_representation_star_homomorphism", "lambda(f g) = lambda(f) lambda(g) and lambda(f*) = lambda(f)^*",
        [&]() -> Outcome {
          for (std::size_t k = 0; k < 10; ++k) {
            const auto a = random_function(g, rng), b = random_function(g, rng);
            const auto la = regular_representation(a), lb = regular_representation(b);
            const auto lab = regular_representation(convolve(a, b)), las = regular_representation(involution(a));
            for (std::size_t blk = 0; blk < la.blocks.size(); ++blk) {
              const std::size_t m = la.fibers[blk].size();
              for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                  Complex sum = 0.0;
                  for (std::size_t l = 0; l < m; ++l) sum += la.blocks[blk][i * m + l] * lb.blocks[blk][l * m + j];
                  if (std::abs(sum - lab.blocks[blk][i * m + j]) > 1e-12) return {false, "multiplicativity"};
                  if (std::abs(las.blocks[blk][i * m + j] - std::conj(la.blocks[blk][j * m + i])) > 1e-12)
                    return {false, "adjoint"};
                }
            }
          }
          return {true, "10 samples"};
        });
}

}  // namespace

VerificationReport run_suite(const std::string& subject, std::shared_ptr<const InverseSemigroup> s, Suite suite,
                             const SuiteOptions& options) {
  VerificationReport report;
  report.subject = subject;
  report.suite = suite_name(suite);
  Runner runner(report, std::move(s), options);
  if (suite == Suite::kUniversal || suite == Suite::kAll) runner.universal();
  if (suite == Suite::kTight || suite == Suite::kAll) runner.tight();
  if (suite == Suite::kExtension || suite == Suite::kAll) runner.extension();
  if (suite == Suite::kAlgebra || suite == Suite::kAll) runner.algebra();
  return report;
}

}  // namespace isg
