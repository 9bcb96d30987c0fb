#include "isg/kernels.hpp"

namespace isg::kernels::detail {

void cgemm_scalar(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = b[k * n + j].real(), bi = b[k * n + j].imag();
        c[i * n + j] += Complex(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
}

void cgemv_scalar(std::size_t n, const Complex* a, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
      re += ar * x[k].real() - ai * x[k].imag();
      im += ar * x[k].imag() + ai * x[k].real();
    }
    y[i] = Complex(re, im);
  }
}

}  // namespace isg::kernels::detail
