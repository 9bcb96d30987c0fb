#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "isg/algebra.hpp"
#include "isg/builtins.hpp"
#include "isg/error.hpp"
#include "isg/extension.hpp"

using namespace isg;

namespace {

// Largest singular value of the regular representation, block by block.
double eigen_norm(const GroupoidFunction& f) {
  const auto rep = regular_representation(f);
  double best = 0.0;
  for (std::size_t k = 0; k < rep.blocks.size(); ++k) {
    const auto n = static_cast<Eigen::Index>(rep.fibers[k].size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rep.blocks[k][static_cast<std::size_t>(i * n + j)];
    best = std::max(best, Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0));
  }
  return best;
}

// Convolution straight from the definition: (f g)(c) = sum over ab = c.
GroupoidFunction naive_convolve(const GroupoidFunction& f, const GroupoidFunction& g) {
  const auto& G = *f.groupoid;
  auto out = GroupoidFunction::zero(f.groupoid);
  for (Index a = 0; a < G.size(); ++a)
    for (Index b = 0; b < G.size(); ++b)
      if (G.d(a) == G.r(b)) out.values[G.compose(a, b)] += f.values[a] * g.values[b];
  return out;
}

std::shared_ptr<const FiniteGroupoid> universal(const char* name) {
  return universal_groupoid(std::make_shared<const InverseSemigroup>(builtin(name))).groupoid;
}

}  // namespace

TEST_CASE("norms of simple functions") {
  auto pair = std::make_shared<const FiniteGroupoid>(pair_groupoid(2));
  auto ones = GroupoidFunction::zero(pair);
  for (auto& v : ones.values) v = 1.0;
  CHECK(reduced_norm(ones) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(reduced_norm(GroupoidFunction::delta(pair, pair->unit_list()[0])) == doctest::Approx(1.0).epsilon(1e-12));
  auto z2 = std::make_shared<const FiniteGroupoid>(group_groupoid(builtin("group:cyclic:2"), ElementSet::full(2)));
  auto sum = GroupoidFunction::delta(z2, 0) + GroupoidFunction::delta(z2, 1);
  CHECK(reduced_norm(sum) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(reduced_norm(GroupoidFunction::zero(z2)) == 0.0);
}

TEST_CASE("spectral norm agrees with a singular value decomposition") {
  std::mt19937_64 rng(99);
  for (const auto& c : corpus()) {
    const auto g = universal_groupoid(c.semigroup).groupoid;
    if (g->size() == 0) continue;
    for (int k = 0; k < 5; ++k) {
      const auto f = random_function(g, rng);
      CHECK(reduced_norm(f) == doctest::Approx(eigen_norm(f)).epsilon(1e-9));
    }
  }
}

TEST_CASE("spectral norm separates nearly degenerate singular values") {
  const std::size_t n = 3;
  std::vector<Complex> m(n * n, 0.0);
  m[0] = 1.0;
  m[4] = 1.0 - 1e-9;
  m[8] = Complex(0.0, 0.5);
  CHECK(spectral_norm(n, m) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("convolution matches the definition") {
  std::mt19937_64 rng(5);
  for (const char* name : {"diamond_munn", "b2", "symmetric:3", "semidirect_diamond"}) {
    const auto g = universal(name);
    for (int k = 0; k < 10; ++k) {
      const auto a = random_function(g, rng), b = random_function(g, rng);
      CHECK(max_abs_difference(convolve(a, b), naive_convolve(a, b)) < 1e-12);
    }
  }
}

TEST_CASE("convolution of different groupoids is an error") {
  const auto a = GroupoidFunction::zero(universal("b2"));
  const auto b = GroupoidFunction::zero(universal("b2"));
  try {
    convolve(a, b);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGroupoidMismatch);
  }
}

TEST_CASE("C*-identity over the corpus") {
  std::mt19937_64 rng(11);
  for (const auto& c : corpus()) {
    const auto g = universal_groupoid(c.semigroup).groupoid;
    for (int k = 0; k < 5; ++k) {
      const auto f = random_function(g, rng);
      const double n = reduced_norm(f);
      CHECK(reduced_norm(convolve(involution(f), f)) == doctest::Approx(n * n).epsilon(1e-9));
    }
  }
}

TEST_CASE("conditional expectation onto G(Z)") {
  for (const char* name : {"diamond_munn", "clifford_chain:kill", "semidirect_diamond", "brandt:2:2"}) {
    auto s = std::make_shared<const InverseSemigroup>(builtin(name));
    const auto u = universal_groupoid(s);
    const auto gz = induced_subgroupoid(u.action, u.germs, centralizer(*s));
    const Inclusion inc = make_inclusion(u.groupoid, gz.arrows);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
      const auto f = random_function(u.groupoid, rng);
      const auto pf = conditional_expectation(inc, f);
      // Phi is restriction to H.
      for (std::size_t i = 0; i < inc.to_ambient.size(); ++i) CHECK(pf.values[i] == f.values[inc.to_ambient[i]]);
      CHECK(reduced_norm(pf) <= reduced_norm(f) + 1e-9);
      const auto h = random_function(inc.sub, rng);
      CHECK(reduced_norm(embed(inc, h)) == doctest::Approx(reduced_norm(h)).epsilon(1e-9));
    }
  }
}

TEST_CASE("make_inclusion names the failing hypothesis") {
  // Units of the pair groupoid minus one point: not wide.
  auto pair = std::make_shared<const FiniteGroupoid>(pair_groupoid(2));
  ElementSet one(pair->size(), {pair->unit_list()[0]});
  try {
    make_inclusion(pair, one);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kHypothesisFailed);
    CHECK(std::string(e.what()).find("wide") != std::string::npos);
  }
  // All of the pair groupoid: not a group bundle.
  try {
    make_inclusion(pair, ElementSet::full(pair->size()));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("group_bundle") != std::string::npos);
  }
}
