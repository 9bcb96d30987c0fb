#include "isg/groupoid.hpp"

#include <algorithm>
#include <map>

#include "isg/error.hpp"

namespace isg {

namespace {

[[noreturn]] void bad_groupoid(const std::string& what, std::vector<std::size_t> witness = {}) {
  throw Error(ErrorKind::kInvalidGroupoid, what, std::move(witness));
}

}  // namespace

std::vector<BasisSet> discrete_basis(std::size_t n) {
  std::vector<BasisSet> basis;
  basis.reserve(n);
  for (std::size_t a = 0; a < n; ++a) basis.push_back({ElementSet(n, {static_cast<Index>(a)}), "{" + std::to_string(a) + "}"});
  return basis;
}

FiniteGroupoid FiniteGroupoid::build(Data data) {
  FiniteGroupoid g;
  const std::size_t n = data.range.size();
  g.n_ = n;
  if (data.source.size() != n || data.inverse.size() != n || data.composition.size() != n * n)
    bad_groupoid("inconsistent array sizes");
  if (data.labels.empty())
    for (std::size_t a = 0; a < n; ++a) data.labels.push_back(std::to_string(a));
  if (data.labels.size() != n) bad_groupoid("label count mismatch");
  if (data.basis.empty()) {
    data.basis = discrete_basis(n);
    g.assumed_discrete_ = true;
  }
  g.data_ = std::move(data);

  for (Index a = 0; a < n; ++a)
    if (g.r(a) >= n || g.d(a) >= n || g.inv(a) >= n) bad_groupoid("index out of range", {a});
  g.units_ = ElementSet(n);
  for (Index a = 0; a < n; ++a) {
    for (Index u : {g.r(a), g.d(a)})
      if (g.r(u) != u || g.d(u) != u) bad_groupoid("range/source is not a unit", {a});
    if (g.is_unit(a)) {
      g.units_.insert(a);
      g.unit_list_.push_back(a);
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = g.compose(a, b);
      const bool composable = g.d(a) == g.r(b);
      if (composable != (ab != kNone)) bad_groupoid("composition defined off d(a) = r(b)", {a, b});
      if (!composable) continue;
      if (ab >= n) bad_groupoid("composition out of range", {a, b});
      if (g.r(ab) != g.r(a) || g.d(ab) != g.d(b)) bad_groupoid("r(ab) or d(ab) wrong", {a, b});
      g.pairs_.emplace_back(a, b, ab);
    }
  for (Index a = 0; a < n; ++a) {
    if (g.compose(g.r(a), a) != a || g.compose(a, g.d(a)) != a) bad_groupoid("unit law fails", {a});
    const Index ai = g.inv(a);
    if (g.inv(ai) != a || g.r(ai) != g.d(a) || g.d(ai) != g.r(a)) bad_groupoid("bad inverse", {a});
    if (g.compose(a, ai) != g.r(a) || g.compose(ai, a) != g.d(a)) bad_groupoid("inverse law fails", {a});
    if (g.is_unit(a) && (g.compose(a, a) != a || ai != a)) bad_groupoid("unit not idempotent", {a});
  }
  for (const auto& [a, b, ab] : g.pairs_) {
    if (g.compose(g.inv(a), ab) != b) bad_groupoid("inv(a)(ab) != b", {a, b});
    for (Index c = 0; c < n; ++c) {
      if (g.d(b) != g.r(c)) continue;
      if (g.compose(ab, c) != g.compose(a, g.compose(b, c))) bad_groupoid("not associative", {a, b, c});
    }
  }
  ElementSet covered(n);
  for (const auto& set : g.data_.basis) {
    if (set.arrows.universe() != n) bad_groupoid("basis set over the wrong universe");
    covered |= set.arrows;
  }
  if (covered.count() != n) bad_groupoid("basis does not cover the groupoid");

  g.source_fiber_.assign(n, {});
  for (Index a = 0; a < n; ++a) g.source_fiber_[g.d(a)].push_back(a);
  return g;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  FiniteGroupoid::Data data;
  const std::size_t m = n * n;
  data.range.resize(m);
  data.source.resize(m);
  data.inverse.resize(m);
  data.composition.assign(m * m, FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t a = i * n + j;
      data.labels.push_back("(" + std::to_string(i) + "<-" + std::to_string(j) + ")");
      data.range[a] = static_cast<Index>(i * n + i);
      data.source[a] = static_cast<Index>(j * n + j);
      data.inverse[a] = static_cast<Index>(j * n + i);
      for (std::size_t k = 0; k < n; ++k)
        data.composition[a * m + j * n + k] = static_cast<Index>(i * n + k);
    }
  return FiniteGroupoid::build(std::move(data));
}

FiniteGroupoid unit_groupoid(std::size_t n) {
  FiniteGroupoid::Data data;
  data.composition.assign(n * n, FiniteGroupoid::kNone);
  for (std::size_t a = 0; a < n; ++a) {
    data.range.push_back(static_cast<Index>(a));
    data.source.push_back(static_cast<Index>(a));
    data.inverse.push_back(static_cast<Index>(a));
    data.composition[a * n + a] = static_cast<Index>(a);
  }
  return FiniteGroupoid::build(std::move(data));
}

FiniteGroupoid group_groupoid(const InverseSemigroup& s, const ElementSet& elements) {
  const auto members = elements.to_vector();
  std::vector<Index> local(s.size(), FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Index>(i);
  Index unit = FiniteGroupoid::kNone;
  for (Index x : members)
    if (s.is_idempotent(x)) {
      if (unit != FiniteGroupoid::kNone) bad_groupoid("group has two idempotents", {x});
      unit = local[x];
    }
  if (unit == FiniteGroupoid::kNone) bad_groupoid("group has no identity");
  const std::size_t n = members.size();
  FiniteGroupoid::Data data;
  data.range.assign(n, unit);
  data.source.assign(n, unit);
  data.composition.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    data.labels.push_back(s.label(members[i]));
    const Index inv = local[s.inv(members[i])];
    if (inv == FiniteGroupoid::kNone) bad_groupoid("not closed under inverse", {members[i]});
    data.inverse.push_back(inv);
    for (std::size_t j = 0; j < n; ++j) {
      const Index p = local[s.mul(members[i], members[j])];
      if (p == FiniteGroupoid::kNone) bad_groupoid("not closed under product", {members[i], members[j]});
      data.composition[i * n + j] = p;
    }
  }
  return FiniteGroupoid::build(std::move(data));
}

FiniteGroup::FiniteGroup(FiniteGroupoid g) : g_(std::move(g)) {
  if (g_.unit_list().size() != 1) bad_groupoid("a group has exactly one unit");
}

Subgroupoid restrict(const FiniteGroupoid& g, const ElementSet& arrows) {
  Subgroupoid out;
  out.arrows = arrows;
  out.to_ambient = arrows.to_vector();
  const std::size_t m = out.to_ambient.size();
  std::vector<Index> local(g.size(), FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < m; ++i) local[out.to_ambient[i]] = static_cast<Index>(i);
  auto to_local = [&](Index a) {
    const Index l = local[a];
    if (l == FiniteGroupoid::kNone) bad_groupoid("subset is not closed", {a});
    return l;
  };
  FiniteGroupoid::Data data;
  data.composition.assign(m * m, FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const Index a = out.to_ambient[i];
    data.labels.push_back(g.label(a));
    data.range.push_back(to_local(g.r(a)));
    data.source.push_back(to_local(g.d(a)));
    data.inverse.push_back(to_local(g.inv(a)));
    for (std::size_t j = 0; j < m; ++j) {
      const Index ab = g.compose(a, out.to_ambient[j]);
      if (ab != FiniteGroupoid::kNone) data.composition[i * m + j] = to_local(ab);
    }
  }
  if (!g.basis_is_assumed_discrete()) {
    std::vector<ElementSet> seen;
    for (const auto& set : g.basis()) {
      const ElementSet part = set.arrows & arrows;
      if (part.empty()) continue;
      ElementSet l(m);
      for (Index a : part.to_vector()) l.insert(local[a]);
      if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
      seen.push_back(l);
      data.basis.push_back({std::move(l), set.label});
    }
  }
  out.groupoid = FiniteGroupoid::build(std::move(data));
  return out;
}

ElementSet iso_bundle(const FiniteGroupoid& g) {
  ElementSet iso(g.size());
  for (Index a = 0; a < g.size(); ++a)
    if (g.r(a) == g.d(a)) iso.insert(a);
  return iso;
}

ElementSet interior(const FiniteGroupoid& g, const ElementSet& set) {
  ElementSet in(g.size());
  for (const auto& b : g.basis())
    if (b.arrows.is_subset_of(set)) in |= b.arrows;
  return in;
}

ElementSet iso_interior(const FiniteGroupoid& g) { return interior(g, iso_bundle(g)); }

bool is_open(const FiniteGroupoid& g, const ElementSet& set) { return interior(g, set) == set; }

bool is_closed(const FiniteGroupoid& g, const ElementSet& set) { return is_open(g, set.complement()); }

bool is_group_bundle(const FiniteGroupoid& g) { return iso_bundle(g).count() == g.size(); }

bool is_effective(const FiniteGroupoid& g) {
  const ElementSet off_units = g.units().complement();
  for (const auto& b : g.basis()) {
    if (b.arrows.empty() || !b.arrows.is_subset_of(off_units)) continue;
    bool has_non_isotropy = false;
    for (Index a : b.arrows.to_vector()) has_non_isotropy |= g.r(a) != g.d(a);
    if (!has_non_isotropy) return false;
  }
  return true;
}

bool is_essentially_principal(const FiniteGroupoid& g) { return iso_interior(g) == g.units(); }

ElementSet isotropy_at(const FiniteGroupoid& g, Index unit) {
  ElementSet out(g.size());
  for (Index a = 0; a < g.size(); ++a)
    if (g.r(a) == unit && g.d(a) == unit) out.insert(a);
  return out;
}

FiniteGroup fiber_group(const FiniteGroupoid& g, Index unit) {
  if (!g.is_unit(unit)) bad_groupoid("fiber requested at a non-unit", {unit});
  return FiniteGroup(restrict(g, isotropy_at(g, unit)).groupoid);
}

SubgroupoidProperties subgroupoid_properties(const FiniteGroupoid& g, const ElementSet& h) {
  SubgroupoidProperties p;
  p.is_subgroupoid = true;
  for (Index a : h.to_vector()) {
    if (!h.contains(g.inv(a)) || !h.contains(g.r(a)) || !h.contains(g.d(a))) p.is_subgroupoid = false;
    if (g.r(a) != g.d(a)) p.group_bundle = false;
  }
  for (const auto& [a, b, ab] : g.composable_pairs())
    if (h.contains(a) && h.contains(b) && !h.contains(ab)) p.is_subgroupoid = false;
  p.group_bundle = true;
  for (Index a : h.to_vector()) p.group_bundle &= g.r(a) == g.d(a);
  p.open = is_open(g, h);
  p.closed = is_closed(g, h);
  p.wide = g.units().is_subset_of(h);
  p.normal = true;
  for (Index gamma = 0; gamma < g.size() && p.normal; ++gamma)
    for (Index eta : h.to_vector()) {
      const Index left = g.compose(g.inv(gamma), eta);
      if (left == FiniteGroupoid::kNone) continue;
      const Index conj = g.compose(left, gamma);
      if (conj == FiniteGroupoid::kNone) continue;
      if (!h.contains(conj)) {
        p.normal = false;
        break;
      }
    }
  return p;
}

bool is_homomorphism(const FiniteGroupoid& source, const FiniteGroupoid& target,
                     const std::vector<Index>& map) {
  if (map.size() != source.size()) return false;
  for (Index a = 0; a < source.size(); ++a) {
    if (map[a] >= target.size()) return false;
    if (source.is_unit(a) && !target.is_unit(map[a])) return false;
  }
  for (const auto& [a, b, ab] : source.composable_pairs())
    if (target.compose(map[a], map[b]) != map[ab]) return false;
  return true;
}

bool is_strongly_surjective(const GroupoidHom& hom) {
  const auto& src = *hom.source;
  const auto& tgt = *hom.target;
  if (!is_homomorphism(src, tgt, hom.map)) return false;
  ElementSet unit_image(tgt.size());
  for (Index u : src.unit_list()) unit_image.insert(hom.map[u]);
  if (unit_image.count() != src.unit_list().size() || !(unit_image == tgt.units())) return false;
  for (Index u : src.unit_list()) {
    ElementSet image(tgt.size());
    for (Index a : src.source_fiber(u)) image.insert(hom.map[a]);
    if (!(image == ElementSet::from_indices(tgt.size(), tgt.source_fiber(hom.map[u])))) return false;
  }
  return true;
}

ElementSet kernel(const GroupoidHom& hom) {
  ElementSet ker(hom.source->size());
  for (Index a = 0; a < hom.source->size(); ++a)
    if (hom.target->is_unit(hom.map[a])) ker.insert(a);
  return ker;
}

bool is_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b,
                    const std::vector<Index>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<Index> back(b.size(), FiniteGroupoid::kNone);
  for (Index x = 0; x < a.size(); ++x) {
    if (map[x] >= b.size() || back[map[x]] != FiniteGroupoid::kNone) return false;
    back[map[x]] = x;
  }
  return is_homomorphism(a, b, map) && is_homomorphism(b, a, back);
}

BundleAction conjugation_action(const FiniteGroupoid& ambient, const Subgroupoid& h,
                                const FiniteGroupoid& g, const std::vector<Index>& g_to_ambient) {
  const auto& hg = h.groupoid;
  if (!is_group_bundle(hg)) throw Error(ErrorKind::kIncompatibleBundle, "H is not a group bundle");
  if (g_to_ambient.size() != g.size())
    throw Error(ErrorKind::kIncompatibleBundle, "G embedding has the wrong size");
  std::vector<Index> g_unit_of(ambient.size(), FiniteGroupoid::kNone);
  for (Index u : g.unit_list()) g_unit_of[g_to_ambient[u]] = u;
  std::vector<Index> h_local(ambient.size(), FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < h.to_ambient.size(); ++i) h_local[h.to_ambient[i]] = static_cast<Index>(i);

  BundleAction action;
  action.bundle.resize(hg.size());
  for (Index x = 0; x < hg.size(); ++x) {
    const Index u = g_unit_of[ambient.r(h.to_ambient[x])];
    if (u == FiniteGroupoid::kNone)
      throw Error(ErrorKind::kIncompatibleBundle, "H unit is not a G unit", {x});
    action.bundle[x] = u;
  }
  action.act.assign(g.size() * hg.size(), FiniteGroupoid::kNone);
  for (Index gam = 0; gam < g.size(); ++gam) {
    const Index ga = g_to_ambient[gam];
    for (Index x = 0; x < hg.size(); ++x) {
      if (action.bundle[x] != g.d(gam)) continue;
      const Index left = ambient.compose(ga, h.to_ambient[x]);
      const Index conj = left == FiniteGroupoid::kNone ? left : ambient.compose(left, ambient.inv(ga));
      if (conj == FiniteGroupoid::kNone || h_local[conj] == FiniteGroupoid::kNone)
        throw Error(ErrorKind::kIncompatibleBundle, "G does not normalise H", {gam, x});
      action.act[std::size_t{gam} * hg.size() + x] = h_local[conj];
    }
  }
  return action;
}

SemidirectProduct semidirect_product(const FiniteGroupoid& h, const FiniteGroupoid& g,
                                     const BundleAction& action) {
  auto incompatible = [](const std::string& what, std::vector<std::size_t> w = {}) {
    throw Error(ErrorKind::kIncompatibleBundle, what, std::move(w));
  };
  const std::size_t nh = h.size();
  if (!is_group_bundle(h)) incompatible("H is not a group bundle");
  if (action.bundle.size() != nh || action.act.size() != g.size() * nh) incompatible("action has the wrong shape");
  for (Index x = 0; x < nh; ++x) {
    if (action.bundle[x] >= g.size() || !g.is_unit(action.bundle[x])) incompatible("bundle map misses G units", {x});
    if (action.bundle[h.r(x)] != action.bundle[x]) incompatible("bundle map not constant on fibres", {x});
  }
  std::vector<Index> h_unit_over(g.size(), FiniteGroupoid::kNone);
  for (Index u : h.unit_list()) {
    if (h_unit_over[action.bundle[u]] != FiniteGroupoid::kNone) incompatible("bundle map not injective on units", {u});
    h_unit_over[action.bundle[u]] = u;
  }
  for (Index u : g.unit_list())
    if (h_unit_over[u] == FiniteGroupoid::kNone) incompatible("G unit without an H unit", {u});

  auto act = [&](Index gam, Index x) { return action.act[std::size_t{gam} * nh + x]; };
  for (Index gam = 0; gam < g.size(); ++gam)
    for (Index x = 0; x < nh; ++x) {
      const Index y = act(gam, x);
      if ((action.bundle[x] == g.d(gam)) != (y != FiniteGroupoid::kNone)) incompatible("action defined off d(g) = p(h)", {gam, x});
      if (y == FiniteGroupoid::kNone) continue;
      if (y >= nh || action.bundle[y] != g.r(gam)) incompatible("g.h lies over the wrong unit", {gam, x});
      if (g.is_unit(gam) && y != x) incompatible("units do not act trivially", {gam, x});
    }
  for (const auto& [g1, g2, g12] : g.composable_pairs())
    for (Index x = 0; x < nh; ++x)
      if (action.bundle[x] == g.d(g2) && act(g12, x) != act(g1, act(g2, x)))
        incompatible("action is not compatible with composition", {g1, g2, x});
  for (Index gam = 0; gam < g.size(); ++gam)
    for (const auto& [x, y, xy] : h.composable_pairs())
      if (action.bundle[x] == g.d(gam) && act(gam, xy) != h.compose(act(gam, x), act(gam, y)))
        incompatible("action is not by homomorphisms", {gam, x, y});

  SemidirectProduct out;
  std::map<std::pair<Index, Index>, Index> index;
  for (Index gam = 0; gam < g.size(); ++gam)
    for (Index x = 0; x < nh; ++x)
      if (action.bundle[x] == g.r(gam)) {
        index.emplace(std::pair{x, gam}, static_cast<Index>(out.pairs.size()));
        out.pairs.emplace_back(x, gam);
      }
  const std::size_t n = out.pairs.size();
  auto at = [&](Index x, Index gam) { return index.at({x, gam}); };
  FiniteGroupoid::Data data;
  data.composition.assign(n * n, FiniteGroupoid::kNone);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, gam] = out.pairs[i];
    data.labels.push_back("(" + h.label(x) + "," + g.label(gam) + ")");
    data.range.push_back(at(h_unit_over[g.r(gam)], g.r(gam)));
    data.source.push_back(at(h_unit_over[g.d(gam)], g.d(gam)));
    const Index ginv = g.inv(gam);
    data.inverse.push_back(at(act(ginv, h.inv(x)), ginv));
    for (std::size_t j = 0; j < n; ++j) {
      const auto [y, delta] = out.pairs[j];
      const Index gd = g.compose(gam, delta);
      if (gd == FiniteGroupoid::kNone) continue;
      data.composition[i * n + j] = at(h.compose(x, act(gam, y)), gd);
    }
  }
  out.groupoid = FiniteGroupoid::build(std::move(data));
  return out;
}

namespace {

struct ArrowSignature {
  bool unit;
  bool loop;
  std::size_t loop_order;
  std::size_t isotropy;
  std::size_t out_degree;
  std::size_t in_degree;
  friend bool operator==(const ArrowSignature&, const ArrowSignature&) = default;
};

std::vector<ArrowSignature> signatures(const FiniteGroupoid& g) {
  std::vector<std::size_t> iso(g.size(), 0), from(g.size(), 0), to(g.size(), 0);
  for (Index a = 0; a < g.size(); ++a) {
    ++from[g.d(a)];
    ++to[g.r(a)];
    if (g.r(a) == g.d(a)) ++iso[g.r(a)];
  }
  std::vector<ArrowSignature> out(g.size());
  for (Index a = 0; a < g.size(); ++a) {
    ArrowSignature& s = out[a];
    s.unit = g.is_unit(a);
    s.loop = g.r(a) == g.d(a);
    s.loop_order = 0;
    if (s.loop) {
      Index p = a;
      std::size_t k = 1;
      while (p != g.r(a)) {
        p = g.compose(p, a);
        ++k;
      }
      s.loop_order = k;
    }
    s.isotropy = iso[g.r(a)];
    s.out_degree = from[g.d(a)];
    s.in_degree = to[g.r(a)];
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteGroupoid& a, const FiniteGroupoid& b, const IsomorphismOptions& opts)
      : a_(a), b_(b), opts_(opts), map_(a.size(), kNone), used_(b.size(), 0) {}

  std::optional<std::vector<Index>> run() {
    const auto sa = signatures(a_);
    const auto sb = signatures(b_);
    candidates_.resize(a_.size());
    for (Index x = 0; x < a_.size(); ++x)
      for (Index y = 0; y < b_.size(); ++y)
        if (sa[x] == sb[y]) candidates_[x].push_back(y);
    // Units first, then the remaining arrows.
    for (Index x = 0; x < a_.size(); ++x)
      if (a_.is_unit(x)) order_.push_back(x);
    for (Index x = 0; x < a_.size(); ++x)
      if (!a_.is_unit(x)) order_.push_back(x);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Index kNone = FiniteGroupoid::kNone;

  bool search(std::size_t pos) {
    while (pos < order_.size() && map_[order_[pos]] != kNone) ++pos;
    if (pos == order_.size()) return true;
    const Index x = order_[pos];
    for (Index y : candidates_[x]) {
      if (used_[y]) continue;
      if (++nodes_ > opts_.max_nodes)
        throw Error(ErrorKind::kSearchBudgetExceeded, "isomorphism search exceeded its node budget");
      const auto saved_map = map_;
      const auto saved_used = used_;
      const auto saved_assigned = assigned_;
      if (assign(x, y) && search(pos + 1)) return true;
      map_ = saved_map;
      used_ = saved_used;
      assigned_ = saved_assigned;
    }
    return false;
  }

  bool assign(Index x0, Index y0) {
    std::vector<std::pair<Index, Index>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (map_[x] != kNone) {
        if (map_[x] != y) return false;
        continue;
      }
      if (used_[y]) return false;
      map_[x] = y;
      used_[y] = 1;
      work.emplace_back(a_.r(x), b_.r(y));
      work.emplace_back(a_.d(x), b_.d(y));
      work.emplace_back(a_.inv(x), b_.inv(y));
      for (Index z : assigned_) {
        const Index w = map_[z];
        const Index xz = a_.compose(x, z), yw = b_.compose(y, w);
        if ((xz == kNone) != (yw == kNone)) return false;
        if (xz != kNone) work.emplace_back(xz, yw);
        const Index zx = a_.compose(z, x), wy = b_.compose(w, y);
        if ((zx == kNone) != (wy == kNone)) return false;
        if (zx != kNone) work.emplace_back(zx, wy);
      }
      assigned_.push_back(x);
      const Index xx = a_.compose(x, x), yy = b_.compose(y, y);
      if ((xx == kNone) != (yy == kNone)) return false;
      if (xx != kNone) work.emplace_back(xx, yy);
    }
    return true;
  }

  const FiniteGroupoid& a_;
  const FiniteGroupoid& b_;
  const IsomorphismOptions& opts_;
  std::vector<Index> map_;
  std::vector<unsigned char> used_;
  std::vector<Index> assigned_;
  std::vector<Index> order_;
  std::vector<std::vector<Index>> candidates_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Index>> groupoid_isomorphic(const FiniteGroupoid& a,
                                                      const FiniteGroupoid& b,
                                                      const IsomorphismOptions& options) {
  if (a.size() > options.max_arrows || b.size() > options.max_arrows)
    throw Error(ErrorKind::kSearchBudgetExceeded, "groupoid exceeds the arrow cap for isomorphism search",
                {a.size(), b.size()});
  if (a.size() != b.size() || a.unit_list().size() != b.unit_list().size()) return std::nullopt;
  auto map = IsomorphismSearch(a, b, options).run();
  if (map && !is_isomorphism(a, b, *map)) invariant_failure("isomorphism search returned a non-isomorphism");
  return map;
}

}  // namespace isg
