#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isg/element_set.hpp"
#include "isg/groupoid.hpp"
#include "isg/partial_map.hpp"
#include "isg/semigroup.hpp"
#include "isg/semilattice.hpp"

namespace isg {

struct SpaceBasisSet {
  ElementSet points;
  std::string label;
};

/// Points of a filter space, with the semilattice they live in.
struct FilterSpace {
  Semilattice semilattice;
  std::vector<Filter> points;
};

/// An action of S on {0..space_size-1} by partial bijections; maps[s] is alpha_s.
struct Action {
  std::shared_ptr<const InverseSemigroup> semigroup;
  std::size_t space_size = 0;
  std::vector<PartialMap> maps;
  std::vector<std::string> point_names;
  std::vector<SpaceBasisSet> basis;
  /// False when the basis is just the domains plus singletons (no declared topology).
  bool basis_declared = false;
  std::optional<FilterSpace> filters;

  const InverseSemigroup& s() const { return *semigroup; }
  ElementSet domain(Index e) const { return maps[e].domain(); }
};

/// Checks the homomorphism, domain and covering conditions.
/// Errors: kNotHomomorphism, kDomainMismatch, kNotCovering.
Action validate_action(std::shared_ptr<const InverseSemigroup> s, std::size_t space_size,
                       std::vector<PartialMap> maps, std::vector<std::string> point_names = {});

/// beta restricted to a family of filters of E(S) that it leaves invariant.
/// The family may contain filters through the zero of S.
Action filter_action(std::shared_ptr<const InverseSemigroup> s, std::vector<Filter> points);
/// beta on all filters of E(S).
Action universal_action(std::shared_ptr<const InverseSemigroup> s);
/// theta: beta restricted to the ultrafilters.
Action tight_action(std::shared_ptr<const InverseSemigroup> s);

/// J = { st* : alpha_s = alpha_t }.
ElementSet action_kernel(const Action& a);

/// Every singleton is some D_e.
bool domains_form_base(const Action& a);

/// Groupoid of germs of an action.
struct GermGroupoid {
  FiniteGroupoid groupoid;
  std::vector<std::pair<Index, Index>> germs;  // arrow -> canonical (s, x)
  std::vector<Index> class_of;                 // s * space + x -> arrow, kNone off D_{s*s}
  std::vector<Index> unit_of_point;
  std::size_t space_size = 0;

  Index arrow_of(Index s, Index x) const { return class_of[std::size_t{s} * space_size + x]; }
  Index unit_at(Index x) const { return unit_of_point[x]; }
};

GermGroupoid germ_groupoid(const Action& a);

/// Germs with a representative in T. Errors: kNotSubsemigroup when T is not an
/// inverse subsemigroup containing E(S).
Subgroupoid induced_subgroupoid(const Action& a, const GermGroupoid& g, const ElementSet& t);

struct DirectedGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<Index, Index>> edges;  // (src, dst)
};

/// A path e1..ek with src(e_i) = dst(e_{i+1}); vertices are the length-0 paths.
struct GraphPath {
  Index vertex = 0;  // used when edges is empty
  std::vector<Index> edges;
};

struct GraphInverseSemigroup {
  InverseSemigroup semigroup;
  std::vector<std::pair<GraphPath, GraphPath>> elements;  // xy*, the zero has empty slot
};

/// Elements 0 and xy* with s(x) = s(y). Errors: kCyclicGraph.
GraphInverseSemigroup graph_inverse_semigroup(const DirectedGraph& g);

}  // namespace isg
