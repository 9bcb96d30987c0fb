#include "isg/congruence.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "isg/error.hpp"

namespace isg {

bool is_congruence(const InverseSemigroup& s, const Relation& r) {
  if (r.universe() != s.size()) return false;
  for (const auto& block : r.blocks()) {
    const Index a = block.front();
    for (Index b : block) {
      if (b == a) continue;
      for (Index c = 0; c < s.size(); ++c) {
        if (!r.related(s.mul(a, c), s.mul(b, c))) return false;
        if (!r.related(s.mul(c, a), s.mul(c, b))) return false;
      }
    }
  }
  return true;
}

bool is_idempotent_separating(const InverseSemigroup& s, const Relation& r) {
  for (const auto& block : r.blocks()) {
    std::size_t count = 0;
    for (Index x : block) count += s.is_idempotent(x) ? 1 : 0;
    if (count > 1) return false;
  }
  return true;
}

Relation mu_relation(const InverseSemigroup& s) {
  const auto es = idempotents(s).to_vector();
  std::map<std::vector<Index>, std::size_t> signature_id;
  std::vector<std::size_t> key(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    std::vector<Index> sig;
    sig.reserve(es.size());
    for (Index e : es) sig.push_back(s.mul(s.mul(a, e), s.inv(a)));
    key[a] = signature_id.emplace(std::move(sig), signature_id.size()).first->second;
  }
  Relation mu = Relation::from_keys(key);
  if (!is_congruence(s, mu)) invariant_failure("mu is not a congruence");
  if (!is_idempotent_separating(s, mu)) invariant_failure("mu is not idempotent separating");
  if (!mu.refines(h_classes(s))) invariant_failure("mu is not contained in H");
  return mu;
}

ElementSet kernel_of(const InverseSemigroup& s, const Relation& r) {
  ElementSet ker(s.size());
  for (const auto& block : r.blocks()) {
    const bool has_idempotent =
        std::any_of(block.begin(), block.end(), [&](Index x) { return s.is_idempotent(x); });
    if (has_idempotent)
      for (Index x : block) ker.insert(x);
  }
  if (is_congruence(s, r)) {
    ElementSet formula(s.size());
    for (const auto& block : r.blocks())
      for (Index a : block)
        for (Index b : block) formula.insert(s.mul(a, s.inv(b)));
    if (!(formula == ker)) invariant_failure("kernel formulas disagree");
  }
  return ker;
}

QuotientMap quotient(const InverseSemigroup& s, const Relation& r) {
  if (!is_congruence(s, r)) throw Error(ErrorKind::kNotACongruence, "relation is not a congruence");
  const std::size_t m = r.block_count();
  std::vector<Index> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Index a = r.block(i).front();
    std::string label = "[" + s.label(a) + "]";
    labels[i] = std::move(label);
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = r.block_of(s.mul(a, r.block(j).front()));
  }
  QuotientMap q;
  q.target = validate_inverse_semigroup(m, std::move(table), std::move(labels));
  q.projection.resize(s.size());
  for (Index a = 0; a < s.size(); ++a) q.projection[a] = r.block_of(a);
  q.source = s;
  return q;
}

QuotientMap munn_quotient(const InverseSemigroup& s) { return quotient(s, mu_relation(s)); }

bool is_cryptic(const InverseSemigroup& s) { return mu_relation(s) == h_classes(s); }

bool is_fundamental(const InverseSemigroup& s) { return mu_relation(s).is_identity(); }

GroupImage sigma_and_group_image(const InverseSemigroup& s) {
  const auto es = idempotents(s).to_vector();
  UnionFind uf(s.size());
  std::vector<std::vector<unsigned char>> direct(s.size(), std::vector<unsigned char>(s.size(), 0));
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      for (Index e : es)
        if (s.mul(a, e) == s.mul(b, e)) {
          direct[a][b] = 1;
          uf.unite(a, b);
          break;
        }
  Relation sigma = uf.to_relation();
  // The defining condition must already be transitive.
  for (const auto& block : sigma.blocks())
    for (Index a : block)
      for (Index b : block)
        if (!direct[a][b]) invariant_failure("sigma is not transitive", {a, b});
  GroupImage out{sigma, quotient(s, sigma)};
  if (idempotents(out.image.target).count() != 1) invariant_failure("sigma image is not a group");
  return out;
}

Relation congruence_closure(const InverseSemigroup& s,
                            const std::vector<std::pair<Index, Index>>& seeds) {
  UnionFind uf(s.size());
  std::vector<std::pair<Index, Index>> pending;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b)) pending.emplace_back(a, b);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (Index c = 0; c < s.size(); ++c) {
      const Index ac = s.mul(a, c), bc = s.mul(b, c);
      if (uf.unite(ac, bc)) pending.emplace_back(ac, bc);
      const Index ca = s.mul(c, a), cb = s.mul(c, b);
      if (uf.unite(ca, cb)) pending.emplace_back(ca, cb);
    }
  }
  return uf.to_relation();
}

std::vector<Relation> random_idempotent_separating_congruences(const InverseSemigroup& s,
                                                               std::size_t count,
                                                               std::uint64_t seed) {
  const Relation h = h_classes(s);
  std::vector<std::pair<Index, Index>> candidates;
  for (const auto& block : h.blocks())
    for (Index a : block)
      for (Index b : block)
        if (a < b) candidates.emplace_back(a, b);
  std::vector<Relation> out;
  if (candidates.empty()) {
    out.push_back(Relation::identity(s.size()));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_int_distribution<std::size_t> how_many(1, 3);
  for (std::size_t attempt = 0; out.size() < count && attempt < 20 * count; ++attempt) {
    std::vector<std::pair<Index, Index>> seeds;
    const std::size_t k = how_many(rng);
    for (std::size_t i = 0; i < k; ++i) seeds.push_back(candidates[pick(rng)]);
    Relation r = congruence_closure(s, seeds);
    if (is_idempotent_separating(s, r)) out.push_back(std::move(r));
  }
  return out;
}

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const InverseSemigroup& s, const QuotientMap& q)
      : s_(s), t_(q.target), q_(q), assigned_(q.target.size(), kUnset) {}

  std::optional<std::vector<Index>> run() {
    std::vector<std::vector<Index>> candidates(t_.size());
    for (Index a = 0; a < s_.size(); ++a) {
      const Index x = q_.projection[a];
      // r maps idempotents to idempotents, and each block has exactly one.
      if (t_.is_idempotent(x) && !s_.is_idempotent(a)) continue;
      candidates[x].push_back(a);
    }
    candidates_ = std::move(candidates);
    if (search()) return assigned_;
    return std::nullopt;
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  bool search() {
    Index next = kUnset;
    for (Index x = 0; x < t_.size(); ++x)
      if (assigned_[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset) return true;
    for (Index candidate : candidates_[next]) {
      const auto snapshot = assigned_;
      if (assign(next, candidate) && search()) return true;
      assigned_ = snapshot;
    }
    return false;
  }

  // Assigns r(x) = a and closes under r(xy) = r(x)r(y) and r(x*) = r(x)*.
  bool assign(Index x, Index a) {
    std::vector<std::pair<Index, Index>> work{{x, a}};
    while (!work.empty()) {
      auto [y, b] = work.back();
      work.pop_back();
      if (assigned_[y] != kUnset) {
        if (assigned_[y] != b) return false;
        continue;
      }
      if (q_.projection[b] != y) return false;
      assigned_[y] = b;
      work.emplace_back(t_.inv(y), s_.inv(b));
      for (Index z = 0; z < t_.size(); ++z) {
        if (assigned_[z] == kUnset) continue;
        work.emplace_back(t_.mul(y, z), s_.mul(b, assigned_[z]));
        work.emplace_back(t_.mul(z, y), s_.mul(assigned_[z], b));
      }
    }
    return true;
  }

  const InverseSemigroup& s_;
  const InverseSemigroup& t_;
  const QuotientMap& q_;
  std::vector<Index> assigned_;
  std::vector<std::vector<Index>> candidates_;
};

}  // namespace

std::optional<std::vector<Index>> find_split_transversal(const InverseSemigroup& s,
                                                         const QuotientMap& munn,
                                                         const TransversalOptions& options) {
  double product = 1.0;
  std::vector<std::size_t> block_size(munn.target.size(), 0);
  for (Index a = 0; a < s.size(); ++a) ++block_size[munn.projection[a]];
  for (std::size_t size : block_size) product *= static_cast<double>(size);
  if (product > options.max_block_product)
    throw Error(ErrorKind::kSearchBudgetExceeded, "mu-block product exceeds the search budget");
  auto r = TransversalSearch(s, munn).run();
  if (r) {
    for (Index x = 0; x < munn.target.size(); ++x) {
      if (munn.projection[(*r)[x]] != x) invariant_failure("transversal is not a section", {x});
      for (Index y = 0; y < munn.target.size(); ++y)
        if (s.mul((*r)[x], (*r)[y]) != (*r)[munn.target.mul(x, y)])
          invariant_failure("transversal is not multiplicative", {x, y});
    }
  }
  return r;
}

std::optional<std::vector<Index>> find_split_transversal(const InverseSemigroup& s,
                                                         const TransversalOptions& options) {
  return find_split_transversal(s, munn_quotient(s), options);
}

}  // namespace isg
