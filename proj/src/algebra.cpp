#include "isg/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "isg/error.hpp"
#include "isg/kernels.hpp"

namespace isg {

namespace {

void same_groupoid(const GroupoidFunction& f, const GroupoidFunction& g) {
  if (f.groupoid != g.groupoid || f.values.size() != g.values.size())
    throw Error(ErrorKind::kGroupoidMismatch, "functions live on different groupoids");
}

double rayleigh(std::size_t n, const std::vector<Complex>& a, std::vector<Complex>& v,
                std::vector<Complex>& scratch) {
  kernels::cgemv(n, a.data(), v.data(), scratch.data());
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += std::conj(v[i]) * scratch[i];
    den += std::norm(v[i]);
  }
  return den == 0.0 ? 0.0 : num.real() / den;
}

bool normalize(std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  if (s == 0.0 || !std::isfinite(s)) return false;
  const double inv = 1.0 / std::sqrt(s);
  for (auto& z : v) z *= inv;
  return true;
}

}  // namespace

GroupoidFunction GroupoidFunction::zero(std::shared_ptr<const FiniteGroupoid> g) {
  const std::size_t n = g->size();
  return {std::move(g), std::vector<Complex>(n, 0.0)};
}

GroupoidFunction GroupoidFunction::delta(std::shared_ptr<const FiniteGroupoid> g, Index arrow) {
  auto f = zero(std::move(g));
  f.values.at(arrow) = 1.0;
  return f;
}

double GroupoidFunction::max_abs() const {
  double m = 0.0;
  for (const auto& z : values) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_difference(const GroupoidFunction& f, const GroupoidFunction& g) {
  same_groupoid(f, g);
  double m = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) m = std::max(m, std::abs(f.values[i] - g.values[i]));
  return m;
}

bool approx_equal(const GroupoidFunction& f, const GroupoidFunction& g, double tol) {
  return max_abs_difference(f, g) <= tol;
}

GroupoidFunction operator+(const GroupoidFunction& f, const GroupoidFunction& g) {
  same_groupoid(f, g);
  GroupoidFunction h = f;
  for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] += g.values[i];
  return h;
}

GroupoidFunction operator*(Complex c, const GroupoidFunction& f) {
  GroupoidFunction h = f;
  for (auto& z : h.values) z *= c;
  return h;
}

GroupoidFunction convolve(const GroupoidFunction& f, const GroupoidFunction& g) {
  same_groupoid(f, g);
  auto h = GroupoidFunction::zero(f.groupoid);
  for (const auto& [a, b, ab] : f.groupoid->composable_pairs()) h.values[ab] += f.values[a] * g.values[b];
  return h;
}

GroupoidFunction involution(const GroupoidFunction& f) {
  auto h = GroupoidFunction::zero(f.groupoid);
  for (Index a = 0; a < f.values.size(); ++a) h.values[a] = std::conj(f.values[f.groupoid->inv(a)]);
  return h;
}

GroupoidFunction random_function(std::shared_ptr<const FiniteGroupoid> g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto f = GroupoidFunction::zero(std::move(g));
  for (auto& z : f.values) {
    const double re = dist(rng);
    z = Complex(re, dist(rng));
  }
  return f;
}

GroupoidFunction random_integer_function(std::shared_ptr<const FiniteGroupoid> g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  auto f = GroupoidFunction::zero(std::move(g));
  for (auto& z : f.values) {
    const int re = dist(rng);
    z = Complex(re, dist(rng));
  }
  return f;
}

RegularRepresentation regular_representation(const GroupoidFunction& f) {
  const FiniteGroupoid& g = *f.groupoid;
  RegularRepresentation rep;
  for (Index u : g.unit_list()) {
    const auto& fiber = g.source_fiber(u);
    const std::size_t n = fiber.size();
    std::vector<Complex> block(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        block[i * n + j] = f.values[g.compose(fiber[i], g.inv(fiber[j]))];
    rep.units.push_back(u);
    rep.fibers.push_back(fiber);
    rep.blocks.push_back(std::move(block));
  }
  return rep;
}

double spectral_norm(std::size_t n, const std::vector<Complex>& m) {
  if (n == 0) return 0.0;
  // a = m^H m is Hermitian positive semidefinite; its top eigenvalue is ||m||^2.
  std::vector<Complex> mh(n * n), a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mh[i * n + j] = std::conj(m[j * n + i]);
  kernels::cgemm(n, mh.data(), m.data(), a.data());
  double scale = 0.0;
  for (const auto& z : a) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;

  // Repeated squaring separates the top eigenspace even when the spectral gap is tiny.
  std::vector<Complex> p = a, sq(n * n);
  for (auto& z : p) z /= scale;
  for (int k = 0; k < 16; ++k) {
    kernels::cgemm(n, p.data(), p.data(), sq.data());
    double s = 0.0;
    for (const auto& z : sq) s = std::max(s, std::abs(z));
    if (s == 0.0 || !std::isfinite(s)) break;
    for (auto& z : sq) z /= s;
    p.swap(sq);
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> x(n), v(n), scratch(n);
  for (auto& z : x) {
    const double re = dist(rng);
    z = Complex(re, dist(rng));
  }
  kernels::cgemv(n, p.data(), x.data(), v.data());
  if (!normalize(v)) {
    v = x;
    normalize(v);
  }

  double lambda = rayleigh(n, a, v, scratch);
  for (int it = 0; it < 10000; ++it) {
    kernels::cgemv(n, a.data(), v.data(), scratch.data());
    v.swap(scratch);
    if (!normalize(v)) return 0.0;
    const double next = rayleigh(n, a, v, scratch);
    const bool done = std::abs(next - lambda) <= 1e-10 * std::max(1.0, std::abs(next));
    lambda = next;
    if (done) break;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double reduced_norm(const GroupoidFunction& f) {
  const auto rep = regular_representation(f);
  double best = 0.0;
  for (std::size_t k = 0; k < rep.blocks.size(); ++k)
    best = std::max(best, spectral_norm(rep.fibers[k].size(), rep.blocks[k]));
  return best;
}

Inclusion make_inclusion(std::shared_ptr<const FiniteGroupoid> g, const ElementSet& h) {
  const auto props = subgroupoid_properties(*g, h);
  auto fail = [](const char* name) { throw Error(ErrorKind::kHypothesisFailed, name); };
  if (!props.is_subgroupoid) fail("subgroupoid");
  if (!props.group_bundle) fail("group_bundle");
  if (!props.open) fail("open");
  if (!props.closed) fail("closed");
  if (!props.wide) fail("wide");
  if (!props.normal) fail("normal");
  auto sub = restrict(*g, h);
  return Inclusion{std::move(g), std::make_shared<const FiniteGroupoid>(std::move(sub.groupoid)),
                   std::move(sub.to_ambient)};
}

GroupoidFunction embed(const Inclusion& inc, const GroupoidFunction& f) {
  if (f.groupoid != inc.sub) throw Error(ErrorKind::kGroupoidMismatch, "function is not on the subgroupoid");
  auto out = GroupoidFunction::zero(inc.ambient);
  for (std::size_t i = 0; i < inc.to_ambient.size(); ++i) out.values[inc.to_ambient[i]] = f.values[i];
  return out;
}

GroupoidFunction conditional_expectation(const Inclusion& inc, const GroupoidFunction& f) {
  if (f.groupoid != inc.ambient) throw Error(ErrorKind::kGroupoidMismatch, "function is not on the ambient groupoid");
  auto out = GroupoidFunction::zero(inc.sub);
  for (std::size_t i = 0; i < inc.to_ambient.size(); ++i) out.values[i] = f.values[inc.to_ambient[i]];
  return out;
}

}  // namespace isg
