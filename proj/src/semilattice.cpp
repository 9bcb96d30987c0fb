#include "isg/semilattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "isg/congruence.hpp"
#include "isg/error.hpp"

namespace isg {

Semilattice Semilattice::from_meet_table(std::size_t n, std::vector<Index> meet,
                                         std::vector<std::string> labels) {
  if (n == 0 || meet.size() != n * n)
    throw Error(ErrorKind::kMalformedTable, "meet table is not square");
  Semilattice e;
  e.n_ = n;
  e.meet_ = std::move(meet);
  for (Index a = 0; a < n; ++a) {
    if (e.meet(a, a) != a) throw Error(ErrorKind::kNotSemilattice, "meet not idempotent", {a});
    for (Index b = 0; b < n; ++b) {
      if (e.meet(a, b) >= n) throw Error(ErrorKind::kMalformedTable, "entry out of range", {a, b});
      if (e.meet(a, b) != e.meet(b, a))
        throw Error(ErrorKind::kNotSemilattice, "meet not commutative", {a, b});
    }
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (e.meet(e.meet(a, b), c) != e.meet(a, e.meet(b, c)))
          throw Error(ErrorKind::kNotSemilattice, "meet not associative", {a, b, c});
  Index bottom = 0;
  for (Index a = 1; a < n; ++a) bottom = e.meet(bottom, a);
  e.zero_ = bottom;
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  e.labels_ = std::move(labels);
  return e;
}

Semilattice semilattice_of(const InverseSemigroup& s) {
  Semilattice e;
  const auto idem = idempotents(s).to_vector();
  e.n_ = idem.size();
  e.parent_ = idem;
  e.local_.assign(s.size(), Semilattice::kNone);
  for (std::size_t i = 0; i < idem.size(); ++i) e.local_[idem[i]] = static_cast<Index>(i);
  e.meet_.resize(e.n_ * e.n_);
  for (std::size_t i = 0; i < e.n_; ++i) {
    e.labels_.push_back(s.label(idem[i]));
    for (std::size_t j = 0; j < e.n_; ++j) e.meet_[i * e.n_ + j] = e.local_[s.mul(idem[i], idem[j])];
  }
  if (s.zero()) e.zero_ = e.local_[*s.zero()];
  return e;
}

ElementSet Semilattice::up_set(Index e) const {
  ElementSet up(n_);
  for (Index f = 0; f < n_; ++f)
    if (leq(e, f)) up.insert(f);
  return up;
}

ElementSet Semilattice::down_set(Index e) const {
  ElementSet down(n_);
  for (Index f = 0; f < n_; ++f)
    if (leq(f, e)) down.insert(f);
  return down;
}

std::vector<Index> Semilattice::lower_covers(Index e) const {
  std::vector<Index> covers;
  for (Index f = 0; f < n_; ++f) {
    if (f == e || !leq(f, e) || is_zero(f)) continue;
    bool maximal = true;
    for (Index g = 0; g < n_ && maximal; ++g)
      if (g != e && g != f && leq(f, g) && leq(g, e)) maximal = false;
    if (maximal) covers.push_back(f);
  }
  return covers;
}

std::vector<Index> Semilattice::atoms() const {
  std::vector<Index> out;
  for (Index e = 0; e < n_; ++e) {
    if (is_zero(e)) continue;
    bool minimal = true;
    for (Index f = 0; f < n_ && minimal; ++f)
      if (f != e && !is_zero(f) && leq(f, e)) minimal = false;
    if (minimal) out.push_back(e);
  }
  return out;
}

InverseSemigroup Semilattice::as_semigroup() const {
  return validate_inverse_semigroup(n_, meet_, labels_, {.check_associativity = false});
}

bool is_filter(const Semilattice& e, const ElementSet& candidate) {
  if (candidate.universe() != e.size() || candidate.empty()) return false;
  if (e.zero() && candidate.contains(*e.zero())) return false;
  const auto members = candidate.to_vector();
  for (Index a : members) {
    if (!e.up_set(a).is_subset_of(candidate)) return false;
    for (Index b : members)
      if (!candidate.contains(e.meet(a, b))) return false;
  }
  return true;
}

namespace {

Filter principal_filter(const Semilattice& e, Index g) { return Filter{e.up_set(g), g}; }

Index least_member(const Semilattice& e, const ElementSet& f) {
  const auto members = f.to_vector();
  Index m = members.front();
  for (Index a : members) m = e.meet(m, a);
  return m;
}

std::vector<Filter> exhaustive_filters(const Semilattice& e) {
  const std::size_t n = e.size();
  if (n > 20) throw Error(ErrorKind::kSizeBudgetExceeded, "too many idempotents to enumerate subsets");
  std::vector<std::uint32_t> up(n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (e.leq(a, b)) up[a] |= std::uint32_t{1} << b;
  std::vector<Filter> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (e.zero() && (mask >> *e.zero()) & 1u) continue;
    bool upward = true;
    for (Index a = 0; a < n && upward; ++a)
      if ((mask >> a) & 1u) upward = (up[a] & ~mask) == 0;
    if (!upward) continue;
    ElementSet set(n);
    for (Index a = 0; a < n; ++a)
      if ((mask >> a) & 1u) set.insert(a);
    if (!is_filter(e, set)) continue;
    out.push_back(Filter{set, least_member(e, set)});
  }
  std::sort(out.begin(), out.end(),
            [](const Filter& a, const Filter& b) { return a.generator < b.generator; });
  return out;
}

}  // namespace

std::vector<Filter> all_filters(const Semilattice& e, FilterEnumeration mode) {
  if (mode == FilterEnumeration::kAuto)
    mode = e.size() <= 20 ? FilterEnumeration::kExhaustive : FilterEnumeration::kPrincipal;
  if (mode == FilterEnumeration::kExhaustive) return exhaustive_filters(e);
  std::vector<Filter> out;
  for (Index g = 0; g < e.size(); ++g)
    if (!e.is_zero(g)) out.push_back(principal_filter(e, g));
  return out;
}

std::vector<Filter> ultrafilters(const Semilattice& e) {
  const auto filters = all_filters(e);
  std::vector<Filter> out;
  for (const auto& f : filters) {
    bool maximal = true;
    for (const auto& g : filters)
      if (!(g == f) && f.members.is_subset_of(g.members)) maximal = false;
    if (maximal) out.push_back(f);
  }
  const auto atoms = e.atoms();
  if (atoms.size() != out.size()) invariant_failure("ultrafilters differ from atom filters");
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (out[k].generator != atoms[k]) invariant_failure("ultrafilters differ from atom filters", {k});
  return out;
}

std::vector<Filter> tight_spectrum(const Semilattice& e) {
  // A finite Hausdorff space is discrete, so the closure adds nothing.
  return ultrafilters(e);
}

bool is_zero_disjunctive(const Semilattice& e) {
  if (!e.zero()) throw Error(ErrorKind::kZeroRequired, "0-disjunctivity needs a zero");
  for (Index a = 0; a < e.size(); ++a) {
    if (e.is_zero(a)) continue;
    for (Index f = 0; f < e.size(); ++f) {
      if (f == a || !e.leq(a, f)) continue;
      bool witness = false;
      for (Index b = 0; b < e.size() && !witness; ++b)
        witness = !e.is_zero(b) && b != f && e.leq(b, f) && e.is_zero(e.meet(a, b));
      if (!witness) return false;
    }
  }
  return true;
}

bool SpectrumBasisSet::contains(const Filter& f) const {
  if (!f.members.contains(include)) return false;
  for (Index x : exclude)
    if (f.members.contains(x)) return false;
  return true;
}

ElementSet SpectrumBasisSet::evaluate(const std::vector<Filter>& points) const {
  ElementSet out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    if (contains(points[p])) out.insert(p);
  return out;
}

std::string SpectrumBasisSet::label(const Semilattice& e) const {
  std::string out = "N^" + e.label(include);
  if (!exclude.empty()) {
    out += "_{";
    for (std::size_t k = 0; k < exclude.size(); ++k) {
      if (k) out += ',';
      out += e.label(exclude[k]);
    }
    out += '}';
  }
  return out;
}

std::vector<SpectrumBasisSet> spectrum_basis(const Semilattice& e) {
  std::vector<SpectrumBasisSet> out;
  for (Index a = 0; a < e.size(); ++a) {
    if (e.is_zero(a)) continue;
    out.push_back({a, {}});
    auto covers = e.lower_covers(a);
    if (!covers.empty()) out.push_back({a, std::move(covers)});
  }
  return out;
}

PartialMapSemigroup semigroup_of_partial_maps(std::vector<PartialMap> maps,
                                              const std::vector<std::string>& point_names) {
  std::map<PartialMap, Index> index;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i].is_injective())
      throw Error(ErrorKind::kNotInjective, "partial map is not injective", {i});
    if (!index.emplace(maps[i], static_cast<Index>(i)).second)
      throw Error(ErrorKind::kMalformedTable, "duplicate partial map", {i});
  }
  const std::size_t n = maps.size();
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(compose(maps[i], maps[j]));
      if (it == index.end())
        throw Error(ErrorKind::kNotSubsemigroup, "partial maps not closed under composition", {i, j});
      table[i * n + j] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& f : maps) labels.push_back(f.to_string(point_names));
  PartialMapSemigroup out;
  // Composition of partial maps is associative, so the scan is skipped.
  out.semigroup = validate_inverse_semigroup(n, std::move(table), std::move(labels),
                                             {.check_associativity = false});
  out.maps = std::move(maps);
  return out;
}

PartialMapSemigroup inverse_closure(const std::vector<PartialMap>& generators, std::size_t max_size,
                                    const std::vector<std::string>& point_names) {
  std::vector<PartialMap> elements;
  std::map<PartialMap, Index> seen;
  auto add = [&](const PartialMap& f) {
    if (seen.emplace(f, static_cast<Index>(elements.size())).second) {
      elements.push_back(f);
      if (elements.size() > max_size)
        throw Error(ErrorKind::kSizeBudgetExceeded, "inverse closure too large", {max_size});
    }
  };
  for (const auto& g : generators) {
    if (!g.is_injective()) throw Error(ErrorKind::kNotInjective, "generator is not injective");
    add(g);
    add(g.inverse());
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const PartialMap a = elements[i], b = elements[j];
      add(compose(a, b));
      add(compose(b, a));
    }
  return semigroup_of_partial_maps(std::move(elements), point_names);
}

namespace {

// Order isomorphisms from the ideal `from` onto the ideal `to`.
void enumerate_ideal_isomorphisms(const Semilattice& e, const std::vector<Index>& from,
                                  const std::vector<Index>& to, std::vector<PartialMap>& out) {
  if (from.size() != to.size()) return;
  PartialMap f(e.size());
  std::vector<unsigned char> used(e.size(), 0);
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == from.size()) {
      out.push_back(f);
      return;
    }
    for (Index y : to) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Index x = from[j];
        const auto fx = static_cast<Index>(f(x));
        ok = e.leq(from[k], x) == e.leq(y, fx) && e.leq(x, from[k]) == e.leq(fx, y);
      }
      if (!ok) continue;
      used[y] = 1;
      f.set(from[k], static_cast<std::int32_t>(y));
      step(k + 1);
      f.set(from[k], PartialMap::kUndefined);
      used[y] = 0;
    }
  };
  step(0);
}

}  // namespace

PartialMapSemigroup munn_semigroup(const Semilattice& e, std::size_t max_size) {
  std::vector<PartialMap> maps;
  for (Index a = 0; a < e.size(); ++a) {
    const auto from = e.down_set(a).to_vector();
    for (Index b = 0; b < e.size(); ++b) {
      enumerate_ideal_isomorphisms(e, from, e.down_set(b).to_vector(), maps);
      if (maps.size() > max_size)
        throw Error(ErrorKind::kSizeBudgetExceeded, "Munn semigroup too large", {max_size});
    }
  }
  auto out = semigroup_of_partial_maps(std::move(maps), e.labels());
  if (!is_fundamental(out.semigroup)) invariant_failure("Munn semigroup is not fundamental");
  return out;
}

PartialMapSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t max_n) {
  if (n > max_n) throw Error(ErrorKind::kSizeBudgetExceeded, "symmetric inverse monoid too large", {n});
  std::vector<PartialMap> maps;
  std::vector<std::int32_t> images(n, PartialMap::kUndefined);
  // Odometer over {undefined, 0..n-1}^n, keeping the injective assignments.
  while (true) {
    PartialMap f(images);
    if (f.is_injective()) maps.push_back(f);
    std::size_t k = 0;
    while (k < n && images[k] == static_cast<std::int32_t>(n) - 1) images[k++] = PartialMap::kUndefined;
    if (k == n) break;
    ++images[k];
  }
  std::stable_sort(maps.begin(), maps.end(), [](const PartialMap& a, const PartialMap& b) {
    return a.domain().count() < b.domain().count();
  });
  return semigroup_of_partial_maps(std::move(maps));
}

std::optional<std::vector<Index>> semilattice_isomorphism(const Semilattice& a,
                                                          const Semilattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  std::vector<Index> image(n, Semilattice::kNone);
  std::vector<unsigned char> used(n, 0);
  auto degree = [](const Semilattice& e, Index x) {
    return std::pair{e.up_set(x).count(), e.down_set(x).count()};
  };
  std::function<bool(Index)> step = [&](Index x) -> bool {
    if (x == n) return true;
    for (Index y = 0; y < n; ++y) {
      if (used[y] || degree(a, x) != degree(b, y)) continue;
      bool ok = true;
      for (Index z = 0; z < x && ok; ++z) {
        const Index m = a.meet(x, z);
        const Index expected = b.meet(y, image[z]);
        if (m < x) ok = image[m] == expected;
        else if (m == x) ok = expected == y;
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (step(x + 1)) return true;
      used[y] = 0;
      image[x] = Semilattice::kNone;
    }
    return false;
  };
  if (!step(0)) return std::nullopt;
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (image[a.meet(x, y)] != b.meet(image[x], image[y])) return std::nullopt;
  return image;
}

}  // namespace isg
