#include <immintrin.h>

#include "isg/kernels.hpp"

namespace isg::kernels::detail {

namespace {

// (ar + i ai) * [b0, b1] accumulated into acc; lanes are [re0, im0, re1, im1].
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d swapped = _mm256_permute_pd(b, 0b0101);
  const __m256d cross = _mm256_mul_pd(ai, swapped);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, cross));
}

}  // namespace

void cgemm_avx2(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  const double* bp = reinterpret_cast<const double*>(b);
  double* cp = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = cp + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double re = a[i * n + k].real(), im = a[i * n + k].imag();
      if (re == 0.0 && im == 0.0) continue;
      const __m256d ar = _mm256_set1_pd(re);
      const __m256d ai = _mm256_set1_pd(im);
      const double* brow = bp + 2 * k * n;
      for (std::size_t j = 0; j < pairs; ++j) {
        const __m256d acc = _mm256_loadu_pd(crow + 4 * j);
        _mm256_storeu_pd(crow + 4 * j, cmul_acc(acc, ar, ai, _mm256_loadu_pd(brow + 4 * j)));
      }
      if (n % 2) {
        const std::size_t j = n - 1;
        const double br = brow[2 * j], bi = brow[2 * j + 1];
        crow[2 * j] += re * br - im * bi;
        crow[2 * j + 1] += re * bi + im * br;
      }
    }
  }
}

void cgemv_avx2(std::size_t n, const Complex* a, const Complex* x, Complex* y) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* xp = reinterpret_cast<const double*>(x);
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = ap + 2 * i * n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < pairs; ++k) {
      // a row entries [ar0, ai0, ar1, ai1] times x entries [xr0, xi0, xr1, xi1]
      const __m256d av = _mm256_loadu_pd(arow + 4 * k);
      const __m256d xv = _mm256_loadu_pd(xp + 4 * k);
      const __m256d ar = _mm256_movedup_pd(av);
      const __m256d ai = _mm256_permute_pd(av, 0b1111);
      acc = cmul_acc(acc, ar, ai, xv);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2], im = lanes[1] + lanes[3];
    if (n % 2) {
      const std::size_t k = n - 1;
      const double ar = arow[2 * k], ai = arow[2 * k + 1];
      re += ar * xp[2 * k] - ai * xp[2 * k + 1];
      im += ar * xp[2 * k + 1] + ai * xp[2 * k];
    }
    y[i] = Complex(re, im);
  }
}

}  // namespace isg::kernels::detail
