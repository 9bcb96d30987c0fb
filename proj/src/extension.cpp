#include "isg/extension.hpp"

#include <algorithm>
#include <map>

#include "isg/error.hpp"

namespace isg {

UniversalGroupoid universal_groupoid(std::shared_ptr<const InverseSemigroup> s) {
  UniversalGroupoid u;
  u.semigroup = s;
  u.action = universal_action(std::move(s));
  u.germs = germ_groupoid(u.action);
  u.groupoid = std::make_shared<const FiniteGroupoid>(u.germs.groupoid);
  return u;
}

UniversalGroupoid universal_groupoid(std::shared_ptr<const InverseSemigroup> s, std::vector<Filter> points) {
  UniversalGroupoid u;
  u.semigroup = s;
  u.action = filter_action(std::move(s), std::move(points));
  u.germs = germ_groupoid(u.action);
  u.groupoid = std::make_shared<const FiniteGroupoid>(u.germs.groupoid);
  return u;
}

namespace {

// Every germ (t, x) of `from` is sent to target.arrow_of(element_map[t], point_map[x]),
// and the result must not depend on the representative.
std::vector<Index> germ_map(const UniversalGroupoid& from, const UniversalGroupoid& to,
                            const std::vector<Index>& element_map, const std::vector<Index>& point_map,
                            ErrorKind kind) {
  std::vector<Index> map(from.groupoid->size(), FiniteGroupoid::kNone);
  const std::size_t m = from.action.space_size;
  for (Index t = 0; t < from.semigroup->size(); ++t)
    for (Index x = 0; x < m; ++x) {
      const Index arrow = from.germs.arrow_of(t, x);
      if (arrow == FiniteGroupoid::kNone) continue;
      const Index image = to.germs.arrow_of(element_map[t], point_map[x]);
      if (image == FiniteGroupoid::kNone) throw Error(kind, "germ image undefined", {t, x});
      if (map[arrow] != FiniteGroupoid::kNone && map[arrow] != image)
        throw Error(kind, "germ map depends on the representative", {t, x});
      map[arrow] = image;
    }
  return map;
}

}  // namespace

MuProjection mu_projection_hom(std::shared_ptr<const InverseSemigroup> s) {
  MuProjection p;
  p.munn = munn_quotient(*s);
  p.source = universal_groupoid(s);
  auto q = std::make_shared<const InverseSemigroup>(p.munn.target);
  const auto& src_space = *p.source.action.filters;
  const Semilattice qe = semilattice_of(*q);
  std::vector<Filter> images;
  for (const auto& f : src_space.points) {
    Filter image{ElementSet(qe.size()), 0};
    for (Index e : f.members.to_vector())
      image.members.insert(qe.local_index(p.munn.projection[src_space.semilattice.parent_index(e)]));
    image.generator = qe.local_index(p.munn.projection[src_space.semilattice.parent_index(f.generator)]);
    if (!(image.members == qe.up_set(image.generator))) invariant_failure("projected filter is not principal", {f.generator});
    images.push_back(std::move(image));
  }
  // Keep the target's points in generator order; the projection is injective on E.
  std::vector<Filter> sorted = images;
  std::sort(sorted.begin(), sorted.end(), [](const Filter& a, const Filter& b) { return a.generator < b.generator; });
  p.target = universal_groupoid(q, sorted);
  for (const auto& image : images)
    for (Index k = 0; k < sorted.size(); ++k)
      if (sorted[k] == image) p.point_map.push_back(k);
  p.hom.source = p.source.groupoid;
  p.hom.target = p.target.groupoid;
  try {
    p.hom.map = germ_map(p.source, p.target, p.munn.projection, p.point_map, ErrorKind::kInvariantViolation);
  } catch (const Error& e) {
    invariant_failure(std::string("phi is not well defined: ") + e.what(), e.witness());
  }
  if (!is_homomorphism(*p.hom.source, *p.hom.target, p.hom.map)) invariant_failure("phi is not a homomorphism");
  return p;
}

SigmaCocycle sigma_cocycle(std::shared_ptr<const InverseSemigroup> s) {
  if (s->has_zero()) throw Error(ErrorKind::kZeroPresent, "the cocycle needs a zero-free semigroup", {*s->zero()});
  SigmaCocycle c{sigma_and_group_image(*s), universal_groupoid(s), {}};
  const auto& target = c.image.image.target;
  auto group = std::make_shared<const FiniteGroupoid>(group_groupoid(target, ElementSet::full(target.size())));
  c.hom.source = c.source.groupoid;
  c.hom.target = group;
  c.hom.map.assign(c.source.groupoid->size(), FiniteGroupoid::kNone);
  const std::size_t m = c.source.action.space_size;
  for (Index t = 0; t < s->size(); ++t)
    for (Index x = 0; x < m; ++x) {
      const Index arrow = c.source.germs.arrow_of(t, x);
      if (arrow == FiniteGroupoid::kNone) continue;
      const Index g = c.image.image.projection[t];
      if (c.hom.map[arrow] != FiniteGroupoid::kNone && c.hom.map[arrow] != g)
        invariant_failure("cocycle depends on the representative", {t, x});
      c.hom.map[arrow] = g;
    }
  if (!is_homomorphism(*c.hom.source, *c.hom.target, c.hom.map)) invariant_failure("cocycle is not a homomorphism");
  return c;
}

SplitCheck split_iso_check(std::shared_ptr<const InverseSemigroup> s, const std::vector<Index>& r) {
  SplitCheck out;
  out.projection = mu_projection_hom(s);
  const auto& q = out.projection.munn.target;
  if (r.size() != q.size()) throw Error(ErrorKind::kNotATransversal, "transversal has the wrong size");
  for (Index x = 0; x < q.size(); ++x) {
    if (r[x] >= s->size() || out.projection.munn.projection[r[x]] != x)
      throw Error(ErrorKind::kNotATransversal, "mu(r(x)) != x", {x});
    for (Index y = 0; y < q.size(); ++y)
      if (r[q.mul(x, y)] != s->mul(r[x], r[y]))
        throw Error(ErrorKind::kNotATransversal, "r is not multiplicative", {x, y});
  }

  const auto& source = out.projection.source;
  const auto& target = out.projection.target;
  const auto& g = *source.groupoid;
  std::vector<Index> back(target.action.space_size, FiniteGroupoid::kNone);
  for (std::size_t k = 0; k < out.projection.point_map.size(); ++k)
    back[out.projection.point_map[k]] = static_cast<Index>(k);
  out.rho = germ_map(target, source, r, back, ErrorKind::kNotATransversal);
  if (!is_homomorphism(*target.groupoid, g, out.rho))
    throw Error(ErrorKind::kNotATransversal, "rho is not a homomorphism");
  ElementSet hit(g.size());
  for (Index a : out.rho) {
    if (hit.contains(a)) throw Error(ErrorKind::kNotATransversal, "rho is not injective", {a});
    hit.insert(a);
  }

  out.centralizer_groupoid = induced_subgroupoid(source.action, source.germs, centralizer(*s));
  const auto& h = out.centralizer_groupoid;
  const auto action = conjugation_action(g, h, *target.groupoid, out.rho);
  out.product = semidirect_product(h.groupoid, *target.groupoid, action);
  for (const auto& [eta, gamma] : out.product.pairs)
    out.certificate.push_back(g.compose(h.to_ambient[eta], out.rho[gamma]));
  out.ok = is_isomorphism(out.product.groupoid, g, out.certificate);
  return out;
}

}  // namespace isg
