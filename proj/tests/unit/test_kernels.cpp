#include <doctest.h>

#include <random>
#include <vector>

#include "isg/kernels.hpp"

using namespace isg;
using kernels::Complex;

namespace {

std::vector<Complex> random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> m(n * n);
  for (auto& z : m) {
    const double re = d(rng);
    z = Complex(re, d(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match the textbook loops") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u, 7u}) {
    const auto a = random_matrix(n, rng), b = random_matrix(n, rng);
    std::vector<Complex> c(n * n), y(n);
    kernels::cgemm(kernels::Backend::kScalar, n, a.data(), b.data(), c.data());
    kernels::cgemv(kernels::Backend::kScalar, n, a.data(), b.data(), y.data());
    for (std::size_t i = 0; i < n; ++i) {
      Complex yi = 0.0;
      for (std::size_t k = 0; k < n; ++k) yi += a[i * n + k] * b[k];
      CHECK(std::abs(y[i] - yi) < 1e-12);
      for (std::size_t j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
        CHECK(std::abs(c[i * n + j] - s) < 1e-12);
      }
    }
  }
}

TEST_CASE("AVX2 kernels match the scalar kernels") {
  if (!kernels::backend_available(kernels::Backend::kAvx2)) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 33; ++n) {
    const auto a = random_matrix(n, rng), b = random_matrix(n, rng);
    std::vector<Complex> c1(n * n), c2(n * n), y1(n), y2(n);
    kernels::cgemm(kernels::Backend::kScalar, n, a.data(), b.data(), c1.data());
    kernels::cgemm(kernels::Backend::kAvx2, n, a.data(), b.data(), c2.data());
    kernels::cgemv(kernels::Backend::kScalar, n, a.data(), b.data(), y1.data());
    kernels::cgemv(kernels::Backend::kAvx2, n, a.data(), b.data(), y2.data());
    for (std::size_t i = 0; i < n * n; ++i) CHECK(std::abs(c1[i] - c2[i]) < 1e-12);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-12);
  }
}

TEST_CASE("backend names") {
  CHECK(std::string(kernels::backend_name(kernels::Backend::kScalar)) == "scalar");
  CHECK(kernels::backend_available(kernels::Backend::kScalar));
}
