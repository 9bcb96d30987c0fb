#include "isg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "isg/error.hpp"

namespace isg {

InverseSemigroup build_inverse_semigroup(std::size_t n, std::vector<Index> table,
                                         std::vector<std::string> labels,
                                         bool check_associativity) {
  InverseSemigroup s;
  s.n_ = n;
  s.table_ = std::move(table);

  if (check_associativity) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const Index ab = s.mul(a, b);
        for (Index c = 0; c < n; ++c)
          if (s.mul(ab, c) != s.mul(a, s.mul(b, c)))
            throw Error(ErrorKind::kNotAssociative, "(ab)c != a(bc)", {a, b, c});
      }
  }

  s.idempotent_.assign(n, 0);
  for (Index a = 0; a < n; ++a) s.idempotent_[a] = s.mul(a, a) == a ? 1 : 0;

  s.inv_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    std::vector<std::size_t> found;
    for (Index t = 0; t < n; ++t)
      if (s.mul(s.mul(a, t), a) == a && s.mul(s.mul(t, a), t) == t) found.push_back(t);
    if (found.empty()) throw Error(ErrorKind::kNoInverse, "element has no inverse", {a});
    if (found.size() > 1) {
      found.insert(found.begin(), a);
      throw Error(ErrorKind::kNonUniqueInverse, "element has several inverses", found);
    }
    s.inv_[a] = static_cast<Index>(found.front());
  }

  // Unique inverses imply commuting idempotents; checked anyway since the
  // associativity scan may have been skipped.
  for (Index e = 0; e < n; ++e)
    for (Index f = 0; f < n; ++f)
      if (s.is_idempotent(e) && s.is_idempotent(f) && s.mul(e, f) != s.mul(f, e))
        throw Error(ErrorKind::kNonUniqueInverse, "idempotents do not commute", {e, f});

  for (Index z = 0; z < n && !s.zero_; ++z) {
    bool is_zero = true;
    for (Index a = 0; a < n && is_zero; ++a)
      is_zero = s.mul(z, a) == z && s.mul(a, z) == z;
    if (is_zero) s.zero_ = z;
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  s.labels_ = std::move(labels);
  return s;
}

InverseSemigroup validate_inverse_semigroup(std::size_t n, std::vector<Index> flat_table,
                                            std::vector<std::string> labels,
                                            const ValidationOptions& options) {
  if (n == 0) throw Error(ErrorKind::kMalformedTable, "empty table");
  if (flat_table.size() != n * n) throw Error(ErrorKind::kMalformedTable, "table is not square");
  for (std::size_t k = 0; k < flat_table.size(); ++k)
    if (flat_table[k] >= n)
      throw Error(ErrorKind::kMalformedTable, "table entry out of range", {k / n, k % n});
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::kMalformedTable, "label count does not match table size");
  if (options.check_associativity && n > options.max_checked_size)
    throw Error(ErrorKind::kSizeBudgetExceeded, "table larger than the associativity cap", {n});
  return build_inverse_semigroup(n, std::move(flat_table), std::move(labels),
                                 options.check_associativity);
}

InverseSemigroup validate_inverse_semigroup(const std::vector<std::vector<Index>>& table,
                                            std::vector<std::string> labels,
                                            const ValidationOptions& options) {
  const std::size_t n = table.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::kMalformedTable, "ragged table row", {i});
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return validate_inverse_semigroup(n, std::move(flat), std::move(labels), options);
}

std::optional<Index> InverseSemigroup::find(std::string_view label) const {
  for (std::size_t a = 0; a < n_; ++a)
    if (labels_[a] == label) return static_cast<Index>(a);
  return std::nullopt;
}

std::vector<std::vector<Index>> InverseSemigroup::table_rows() const {
  std::vector<std::vector<Index>> rows(n_);
  for (std::size_t a = 0; a < n_; ++a)
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return rows;
}

ElementSet idempotents(const InverseSemigroup& s) {
  ElementSet e(s.size());
  for (Index a = 0; a < s.size(); ++a)
    if (s.is_idempotent(a)) e.insert(a);
  return e;
}

bool natural_leq(const InverseSemigroup& s, Index a, Index b) {
  for (Index e = 0; e < s.size(); ++e)
    if (s.is_idempotent(e) && s.mul(b, e) == a) return true;
  return false;
}

ElementSet down_set(const InverseSemigroup& s, Index a) {
  ElementSet down(s.size());
  for (Index e = 0; e < s.size(); ++e)
    if (s.is_idempotent(e)) down.insert(s.mul(a, e));
  return down;
}

ElementSet lower_intersection_generators(const InverseSemigroup& s, Index a, Index b) {
  const ElementSet common = down_set(s, a) & down_set(s, b);
  ElementSet maximal(s.size());
  for (Index u : common.to_vector()) {
    bool is_max = true;
    for (Index v : common.to_vector())
      if (v != u && natural_leq(s, u, v)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.insert(u);
  }
  return maximal;
}

Relation h_classes(const InverseSemigroup& s) {
  std::vector<std::size_t> key(s.size());
  for (Index a = 0; a < s.size(); ++a)
    key[a] = std::size_t{s.source_idempotent(a)} * s.size() + s.range_idempotent(a);
  return Relation::from_keys(key);
}

ElementSet maximal_subgroup(const InverseSemigroup& s, Index e) {
  ElementSet h(s.size());
  for (Index a = 0; a < s.size(); ++a)
    if (s.source_idempotent(a) == e && s.range_idempotent(a) == e) h.insert(a);
  return h;
}

Relation d_classes(const InverseSemigroup& s) {
  // Idempotents e, f are D-related iff some x has x*x = e and xx* = f.
  UnionFind uf(s.size());
  for (Index x = 0; x < s.size(); ++x) {
    uf.unite(x, s.source_idempotent(x));
    uf.unite(x, s.range_idempotent(x));
  }
  return uf.to_relation();
}

bool is_clifford(const InverseSemigroup& s) {
  for (Index a = 0; a < s.size(); ++a)
    if (s.source_idempotent(a) != s.range_idempotent(a)) return false;
  return true;
}

namespace {

bool e_unitary_impl(const InverseSemigroup& s, bool skip_zero) {
  for (Index e = 0; e < s.size(); ++e) {
    if (!s.is_idempotent(e) || (skip_zero && s.zero() == e)) continue;
    for (Index a = 0; a < s.size(); ++a)
      if (!s.is_idempotent(a) && natural_leq(s, e, a)) return false;
  }
  return true;
}

}  // namespace

bool is_e_unitary(const InverseSemigroup& s) { return e_unitary_impl(s, false); }

bool is_zero_e_unitary(const InverseSemigroup& s) {
  if (!s.has_zero()) throw Error(ErrorKind::kZeroRequired, "0-E-unitary needs a zero");
  return e_unitary_impl(s, true);
}

bool is_inverse_subsemigroup(const InverseSemigroup& s, const ElementSet& t) {
  const auto members = t.to_vector();
  for (Index a : members) {
    if (!t.contains(s.inv(a))) return false;
    for (Index b : members)
      if (!t.contains(s.mul(a, b))) return false;
  }
  return true;
}

bool is_normal_subsemigroup(const InverseSemigroup& s, const ElementSet& t) {
  if (!idempotents(s).is_subset_of(t)) return false;
  if (!is_inverse_subsemigroup(s, t)) return false;
  for (Index a = 0; a < s.size(); ++a)
    for (Index z : t.to_vector())
      if (!t.contains(s.mul(s.mul(s.inv(a), z), a))) return false;
  return true;
}

ElementSet centralizer(const InverseSemigroup& s) {
  const auto es = idempotents(s).to_vector();
  ElementSet z(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    bool commutes = true;
    for (Index e : es)
      if (s.mul(a, e) != s.mul(e, a)) {
        commutes = false;
        break;
      }
    if (commutes) z.insert(a);
  }
  if (!is_inverse_subsemigroup(s, z)) invariant_failure("centralizer is not closed");
  return z;
}

Subsemigroup restrict_to(const InverseSemigroup& s, const ElementSet& members) {
  if (!is_inverse_subsemigroup(s, members))
    throw Error(ErrorKind::kNotSubsemigroup, "subset is not an inverse subsemigroup");
  Subsemigroup out;
  out.embedding = members.to_vector();
  const std::size_t m = out.embedding.size();
  std::vector<Index> local(s.size(), 0);
  for (std::size_t i = 0; i < m; ++i) local[out.embedding[i]] = static_cast<Index>(i);
  std::vector<Index> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = s.label(out.embedding[i]);
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = local[s.mul(out.embedding[i], out.embedding[j])];
  }
  out.semigroup = validate_inverse_semigroup(m, std::move(table), std::move(labels),
                                             {.check_associativity = false});
  return out;
}

}  // namespace isg
