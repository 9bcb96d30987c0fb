#pragma once
// Brute-force reference computations used only by the tests. They work from
// definitions on the raw multiplication table and share no code with the
// library beyond InverseSemigroup::mul.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "isg/semigroup.hpp"

namespace oracle {

using isg::Index;
using isg::InverseSemigroup;

inline std::vector<Index> inverses(const InverseSemigroup& s) {
  std::vector<Index> inv(s.size());
  for (Index a = 0; a < s.size(); ++a)
    for (Index t = 0; t < s.size(); ++t)
      if (s.mul(s.mul(a, t), a) == a && s.mul(s.mul(t, a), t) == t) inv[a] = t;
  return inv;
}

inline std::vector<Index> idempotents(const InverseSemigroup& s) {
  std::vector<Index> out;
  for (Index a = 0; a < s.size(); ++a)
    if (s.mul(a, a) == a) out.push_back(a);
  return out;
}

inline bool leq(const InverseSemigroup& s, Index a, Index b) {
  for (Index e : oracle::idempotents(s))
    if (s.mul(b, e) == a) return true;
  return false;
}

inline bool h_related(const InverseSemigroup& s, Index a, Index b) {
  const auto inv = oracle::inverses(s);
  return s.mul(inv[a], a) == s.mul(inv[b], b) && s.mul(a, inv[a]) == s.mul(b, inv[b]);
}

inline bool mu_related(const InverseSemigroup& s, Index a, Index b) {
  const auto inv = oracle::inverses(s);
  for (Index e : oracle::idempotents(s))
    if (s.mul(s.mul(a, e), inv[a]) != s.mul(s.mul(b, e), inv[b])) return false;
  return true;
}

inline std::vector<Index> centralizer(const InverseSemigroup& s) {
  std::vector<Index> out;
  for (Index a = 0; a < s.size(); ++a) {
    bool ok = true;
    for (Index e : oracle::idempotents(s)) ok &= s.mul(a, e) == s.mul(e, a);
    if (ok) out.push_back(a);
  }
  return out;
}

inline std::optional<Index> zero(const InverseSemigroup& s) {
  for (Index z = 0; z < s.size(); ++z) {
    bool ok = true;
    for (Index a = 0; a < s.size(); ++a) ok &= s.mul(z, a) == z && s.mul(a, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

inline bool is_cryptic(const InverseSemigroup& s) {
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      if (oracle::h_related(s, a, b) != oracle::mu_related(s, a, b)) return false;
  return true;
}

/// Filters of E(S) as sets of semigroup indices: every nonempty subset of E
/// that is upward closed, closed under products and avoids the zero.
inline std::vector<std::set<Index>> filters(const InverseSemigroup& s) {
  const auto es = oracle::idempotents(s);
  const auto z = oracle::zero(s);
  std::vector<std::set<Index>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << es.size()); ++mask) {
    std::set<Index> f;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (mask >> i & 1) f.insert(es[i]);
    bool ok = !(z && f.count(*z));
    for (Index a : f)
      for (Index b : es) {
        if (s.mul(a, b) == a && !f.count(b)) ok = false;  // a <= b
        if (f.count(b) && !f.count(s.mul(a, b))) ok = false;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

/// Number of germs of the universal action: pairs (t, F) with t*t in F, where
/// (t, F) ~ (u, F) iff te = ue for some e in F.
inline std::size_t universal_germ_count(const InverseSemigroup& s) {
  const auto inv = oracle::inverses(s);
  std::size_t count = 0;
  for (const auto& f : oracle::filters(s)) {
    std::vector<Index> reps;
    for (Index t = 0; t < s.size(); ++t) {
      if (!f.count(s.mul(inv[t], t))) continue;
      bool fresh = true;
      for (Index u : reps)
        for (Index e : f)
          if (s.mul(t, e) == s.mul(u, e)) fresh = false;
      if (fresh) reps.push_back(t);
    }
    count += reps.size();
  }
  return count;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// |I_n| = sum_k C(n,k)^2 k!.
inline std::size_t symmetric_inverse_monoid_size(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= i;
    total += binomial(n, k) * binomial(n, k) * fact;
  }
  return total;
}

}  // namespace oracle
