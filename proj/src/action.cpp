#include "isg/action.hpp"

#include <algorithm>
#include <map>

#include "isg/error.hpp"
#include "isg/relation.hpp"

namespace isg {

namespace {

std::vector<SpaceBasisSet> domain_basis(const Action& a) {
  std::vector<SpaceBasisSet> basis;
  for (Index e : idempotents(a.s()).to_vector()) {
    const ElementSet d = a.domain(e);
    if (!d.empty()) basis.push_back({d, "D_" + a.s().label(e)});
  }
  for (std::size_t x = 0; x < a.space_size; ++x)
    basis.push_back({ElementSet(a.space_size, {static_cast<Index>(x)}), "{" + a.point_names[x] + "}"});
  return basis;
}

std::vector<std::string> filter_names(const Semilattice& e, const std::vector<Filter>& points) {
  std::vector<std::string> names;
  for (const auto& f : points) names.push_back("\xE2\x86\x91" + e.label(f.generator));
  return names;
}

// beta_s(F) = { f : f >= s e s* for some e in F }, defined when s*s is in F.
std::optional<ElementSet> beta(const InverseSemigroup& s, const Semilattice& e, Index a,
                               const ElementSet& filter) {
  if (!filter.contains(e.local_index(s.source_idempotent(a)))) return std::nullopt;
  ElementSet image(e.size());
  for (Index f : filter.to_vector()) {
    const Index conj = e.local_index(s.mul(s.mul(a, e.parent_index(f)), s.inv(a)));
    image |= e.up_set(conj);
  }
  return image;
}

}  // namespace

Action validate_action(std::shared_ptr<const InverseSemigroup> s, std::size_t space_size,
                       std::vector<PartialMap> maps, std::vector<std::string> point_names) {
  const InverseSemigroup& sg = *s;
  if (maps.size() != sg.size())
    throw Error(ErrorKind::kNotHomomorphism, "one map per element is required", {maps.size()});
  for (Index a = 0; a < sg.size(); ++a) {
    if (maps[a].space_size() != space_size)
      throw Error(ErrorKind::kNotHomomorphism, "map has the wrong space size", {a});
    for (std::size_t x = 0; x < space_size; ++x)
      if (maps[a].defined(x) && (maps[a](x) < 0 || static_cast<std::size_t>(maps[a](x)) >= space_size))
        throw Error(ErrorKind::kNotHomomorphism, "image out of range", {a, x});
    if (!maps[a].is_injective()) throw Error(ErrorKind::kNotHomomorphism, "map is not injective", {a});
  }
  for (Index a = 0; a < sg.size(); ++a)
    for (Index b = 0; b < sg.size(); ++b)
      if (!(compose(maps[a], maps[b]) == maps[sg.mul(a, b)]))
        throw Error(ErrorKind::kNotHomomorphism, "alpha_st != alpha_s alpha_t", {a, b});
  for (Index a = 0; a < sg.size(); ++a)
    if (!(maps[a].domain() == maps[sg.source_idempotent(a)].domain()))
      throw Error(ErrorKind::kDomainMismatch, "domain of alpha_s is not D_{s*s}", {a});
  ElementSet covered(space_size);
  for (Index a = 0; a < sg.size(); ++a) covered |= maps[a].domain();
  if (covered.count() != space_size) {
    const auto missing = covered.complement().first();
    throw Error(ErrorKind::kNotCovering, "domains do not cover the space", {missing});
  }
  if (point_names.empty())
    for (std::size_t x = 0; x < space_size; ++x) point_names.push_back(std::to_string(x));
  if (point_names.size() != space_size) throw Error(ErrorKind::kParseError, "point name count mismatch");

  Action out;
  out.semigroup = std::move(s);
  out.space_size = space_size;
  out.maps = std::move(maps);
  out.point_names = std::move(point_names);
  out.basis = domain_basis(out);
  return out;
}

Action filter_action(std::shared_ptr<const InverseSemigroup> s, std::vector<Filter> points) {
  Semilattice e = semilattice_of(*s);
  std::map<ElementSet, Index> index;
  for (std::size_t p = 0; p < points.size(); ++p) index.emplace(points[p].members, static_cast<Index>(p));
  std::vector<PartialMap> maps;
  for (Index a = 0; a < s->size(); ++a) {
    PartialMap m(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto image = beta(*s, e, a, points[p].members);
      if (!image) continue;
      const auto it = index.find(*image);
      if (it == index.end()) invariant_failure("filter space is not invariant", {a, p});
      m.set(p, static_cast<std::int32_t>(it->second));
    }
    maps.push_back(std::move(m));
  }
  auto names = filter_names(e, points);
  Action out = validate_action(std::move(s), points.size(), std::move(maps), std::move(names));
  out.basis.clear();
  for (const auto& b : spectrum_basis(e)) {
    const ElementSet set = b.evaluate(points);
    if (!set.empty()) out.basis.push_back({set, b.label(e)});
  }
  out.basis_declared = true;
  out.filters = FilterSpace{std::move(e), std::move(points)};
  return out;
}

Action universal_action(std::shared_ptr<const InverseSemigroup> s) {
  auto points = all_filters(semilattice_of(*s));
  return filter_action(std::move(s), std::move(points));
}

Action tight_action(std::shared_ptr<const InverseSemigroup> s) {
  auto points = tight_spectrum(semilattice_of(*s));
  return filter_action(std::move(s), std::move(points));
}

ElementSet action_kernel(const Action& a) {
  const InverseSemigroup& s = a.s();
  ElementSet j(s.size());
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y)
      if (a.maps[x] == a.maps[y]) j.insert(s.mul(x, s.inv(y)));
  ElementSet cross(s.size());
  const auto es = idempotents(s).to_vector();
  for (Index x = 0; x < s.size(); ++x)
    for (Index e : es)
      if (a.maps[x] == a.maps[e]) {
        cross.insert(x);
        break;
      }
  if (!(j == cross)) invariant_failure("action kernel formulas disagree");
  if (!is_normal_subsemigroup(s, j)) invariant_failure("action kernel is not normal");
  return j;
}

bool domains_form_base(const Action& a) {
  const auto es = idempotents(a.s()).to_vector();
  for (std::size_t x = 0; x < a.space_size; ++x) {
    const ElementSet single(a.space_size, {static_cast<Index>(x)});
    bool found = false;
    for (Index e : es) found |= a.domain(e) == single;
    if (!found) return false;
  }
  return true;
}

GermGroupoid germ_groupoid(const Action& a) {
  const InverseSemigroup& s = a.s();
  const std::size_t n = s.size();
  const std::size_t m = a.space_size;
  constexpr Index kNone = FiniteGroupoid::kNone;
  const auto es = idempotents(s).to_vector();

  // Germ equivalence on each fiber over x, saturated by union-find and then
  // checked against the defining relation directly.
  std::vector<Index> rep(n * m, kNone);
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<Index> members;
    for (Index t = 0; t < n; ++t)
      if (a.maps[t].defined(x)) members.push_back(t);
    auto related = [&](Index u, Index v) {
      for (Index e : es)
        if (a.maps[e].defined(x) && s.mul(u, e) == s.mul(v, e)) return true;
      return false;
    };
    UnionFind uf(n);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 1; k < members.size(); ++k)
        if (related(members[i], members[k])) uf.unite(members[i], members[k]);
    for (Index u : members)
      for (Index v : members)
        if ((uf.find(u) == uf.find(v)) != related(u, v))
          invariant_failure("germ relation is not transitive", {u, v, x});
    for (Index u : members) {
      Index least = u;
      for (Index v : members)
        if (uf.find(u) == uf.find(v)) least = std::min(least, v);
      rep[std::size_t{u} * m + x] = least;
    }
  }

  GermGroupoid g;
  g.space_size = m;
  for (Index t = 0; t < n; ++t)
    for (std::size_t x = 0; x < m; ++x)
      if (rep[std::size_t{t} * m + x] == t) g.germs.emplace_back(t, static_cast<Index>(x));
  std::map<std::pair<Index, Index>, Index> arrow_index;
  for (std::size_t k = 0; k < g.germs.size(); ++k) arrow_index.emplace(g.germs[k], static_cast<Index>(k));
  g.class_of.assign(n * m, kNone);
  for (Index t = 0; t < n; ++t)
    for (std::size_t x = 0; x < m; ++x) {
      const Index r = rep[std::size_t{t} * m + x];
      if (r != kNone) g.class_of[std::size_t{t} * m + x] = arrow_index.at({r, static_cast<Index>(x)});
    }
  g.unit_of_point.assign(m, kNone);
  for (std::size_t x = 0; x < m; ++x)
    for (Index e : es)
      if (a.maps[e].defined(x)) {
        g.unit_of_point[x] = g.arrow_of(e, static_cast<Index>(x));
        break;
      }

  const std::size_t k = g.germs.size();
  FiniteGroupoid::Data data;
  data.composition.assign(k * k, kNone);
  for (std::size_t i = 0; i < k; ++i) {
    const auto [t, x] = g.germs[i];
    const Index y = static_cast<Index>(a.maps[t](x));
    data.labels.push_back("[" + s.label(t) + "," + a.point_names[x] + "]");
    data.range.push_back(g.unit_at(y));
    data.source.push_back(g.unit_at(x));
    data.inverse.push_back(g.arrow_of(s.inv(t), y));
  }
  // [u, alpha_t(x)][t, x] = [ut, x]
  for (std::size_t i = 0; i < k; ++i) {
    const auto [t, x] = g.germs[i];
    const Index y = static_cast<Index>(a.maps[t](x));
    for (std::size_t j = 0; j < k; ++j) {
      const auto [u, z] = g.germs[j];
      if (z != y) continue;
      data.composition[j * k + i] = g.arrow_of(s.mul(u, t), x);
    }
  }
  // Theta(t, U) = { [t, x] : x in U and D_{t*t} }
  std::vector<ElementSet> seen;
  for (Index t = 0; t < n; ++t) {
    const ElementSet dom = a.domain(t);
    for (const auto& u : a.basis) {
      const ElementSet pts = u.points & dom;
      if (pts.empty()) continue;
      ElementSet arrows(k);
      for (Index x : pts.to_vector()) arrows.insert(g.arrow_of(t, x));
      if (std::find(seen.begin(), seen.end(), arrows) != seen.end()) continue;
      seen.push_back(arrows);
      data.basis.push_back({std::move(arrows), "\xCE\x98(" + s.label(t) + "," + u.label + ")"});
    }
  }
  g.groupoid = FiniteGroupoid::build(std::move(data));
  return g;
}

Subgroupoid induced_subgroupoid(const Action& a, const GermGroupoid& g, const ElementSet& t) {
  const InverseSemigroup& s = a.s();
  if (!idempotents(s).is_subset_of(t) || !is_inverse_subsemigroup(s, t))
    throw Error(ErrorKind::kNotSubsemigroup, "T must be an inverse subsemigroup containing E");
  ElementSet arrows(g.groupoid.size());
  for (Index u : t.to_vector())
    for (std::size_t x = 0; x < a.space_size; ++x) {
      const Index arrow = g.arrow_of(u, static_cast<Index>(x));
      if (arrow != FiniteGroupoid::kNone) arrows.insert(arrow);
    }
  return restrict(g.groupoid, arrows);
}

namespace {

struct PathOps {
  const DirectedGraph& g;

  Index range(const GraphPath& p) const { return p.edges.empty() ? p.vertex : g.edges[p.edges.front()].second; }
  Index source(const GraphPath& p) const { return p.edges.empty() ? p.vertex : g.edges[p.edges.back()].first; }

  // If y is a prefix of u, the remainder z with u = yz.
  std::optional<GraphPath> strip_prefix(const GraphPath& y, const GraphPath& u) const {
    if (y.edges.empty()) {
      if (range(u) != y.vertex) return std::nullopt;
      return u;
    }
    if (u.edges.size() < y.edges.size() || !std::equal(y.edges.begin(), y.edges.end(), u.edges.begin()))
      return std::nullopt;
    GraphPath z;
    z.edges.assign(u.edges.begin() + static_cast<std::ptrdiff_t>(y.edges.size()), u.edges.end());
    z.vertex = source(y);
    return z;
  }

  GraphPath concat(const GraphPath& x, const GraphPath& z) const {
    if (z.edges.empty()) return x;
    if (x.edges.empty()) return z;
    GraphPath out = x;
    out.edges.insert(out.edges.end(), z.edges.begin(), z.edges.end());
    return out;
  }

  std::string label(const GraphPath& p) const {
    if (p.edges.empty()) return "v" + std::to_string(p.vertex);
    std::string out;
    for (Index e : p.edges) out += "e" + std::to_string(e);
    return out;
  }
};

bool same_path(const GraphPath& a, const GraphPath& b) {
  if (a.edges.empty() != b.edges.empty()) return false;
  return a.edges.empty() ? a.vertex == b.vertex : a.edges == b.edges;
}

}  // namespace

GraphInverseSemigroup graph_inverse_semigroup(const DirectedGraph& graph) {
  const std::size_t nv = graph.vertices;
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    if (graph.edges[e].first >= nv || graph.edges[e].second >= nv)
      throw Error(ErrorKind::kParseError, "edge endpoint out of range", {e});
  // Kahn's algorithm; leftover vertices lie on a cycle.
  std::vector<std::size_t> indeg(nv, 0);
  for (const auto& [src, dst] : graph.edges) ++indeg[dst];
  std::vector<Index> queue;
  for (Index v = 0; v < nv; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& [src, dst] : graph.edges)
      if (src == queue[head] && --indeg[dst] == 0) queue.push_back(dst);
  if (queue.size() != nv) {
    for (Index v = 0; v < nv; ++v)
      if (indeg[v] != 0) throw Error(ErrorKind::kCyclicGraph, "graph has a cycle", {v});
  }

  PathOps ops{graph};
  std::vector<GraphPath> paths;
  std::vector<GraphPath> frontier;
  for (Index v = 0; v < nv; ++v) frontier.push_back(GraphPath{v, {}});
  while (!frontier.empty()) {
    std::vector<GraphPath> next;
    for (const auto& p : frontier) {
      paths.push_back(p);
      // extend at the source end: src(e_k) = dst(e_{k+1})
      for (Index e = 0; e < graph.edges.size(); ++e)
        if (graph.edges[e].second == ops.source(p)) {
          GraphPath q;
          q.edges = p.edges;
          q.edges.push_back(e);
          next.push_back(std::move(q));
        }
    }
    frontier = std::move(next);
    if (paths.size() > 4096) throw Error(ErrorKind::kSizeBudgetExceeded, "too many paths");
  }

  GraphInverseSemigroup out;
  out.elements.push_back({});
  for (const auto& x : paths)
    for (const auto& y : paths)
      if (ops.source(x) == ops.source(y)) out.elements.emplace_back(x, y);
  const std::size_t n = out.elements.size();
  if (n > 4096) throw Error(ErrorKind::kSizeBudgetExceeded, "graph semigroup too large");

  auto find = [&](const GraphPath& x, const GraphPath& y) -> Index {
    for (std::size_t i = 1; i < n; ++i)
      if (same_path(out.elements[i].first, x) && same_path(out.elements[i].second, y)) return static_cast<Index>(i);
    invariant_failure("product path pair missing");
  };
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < n; ++i) {
    const auto& [x, y] = out.elements[i];
    if (same_path(x, y) && x.edges.empty()) labels.push_back(ops.label(x));
    else if (y.edges.empty()) labels.push_back(ops.label(x));
    else if (x.edges.empty()) labels.push_back("(" + ops.label(y) + ")*");
    else labels.push_back(ops.label(x) + "(" + ops.label(y) + ")*");
  }
  std::vector<Index> table(n * n, 0);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const auto& [x, y] = out.elements[i];
      const auto& [u, v] = out.elements[j];
      Index p = 0;
      if (auto z = ops.strip_prefix(y, u)) p = find(ops.concat(x, *z), v);
      else if (auto z2 = ops.strip_prefix(u, y)) p = find(x, ops.concat(v, *z2));
      table[i * n + j] = p;
    }
  out.semigroup = validate_inverse_semigroup(n, std::move(table), std::move(labels));

  const InverseSemigroup& s = out.semigroup;
  for (std::size_t i = 1; i < n; ++i) {
    const bool idem = same_path(out.elements[i].first, out.elements[i].second);
    if (idem != s.is_idempotent(static_cast<Index>(i))) invariant_failure("idempotents are not xx*", {i});
  }
  const auto es = idempotents(s).to_vector();
  for (Index e : es)
    for (Index f : es) {
      const Index ef = s.mul(e, f);
      if (ef != 0 && ef != e && ef != f) invariant_failure("semilattice is not unambiguous at 0", {e, f});
    }
  return out;
}

}  // namespace isg
