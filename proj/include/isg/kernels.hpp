#pragma once

#include <complex>
#include <cstddef>

namespace isg::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

/// The backend picked at startup: AVX2 when the CPU supports AVX2 and FMA,
/// unless ISG_KERNELS=scalar is set.
Backend active_backend();
bool backend_available(Backend b);
const char* backend_name(Backend b);

/// c = a * b for row-major n x n matrices. c must not alias a or b.
void cgemm(Backend backend, std::size_t n, const Complex* a, const Complex* b, Complex* c);
/// y = a * x. y must not alias x.
void cgemv(Backend backend, std::size_t n, const Complex* a, const Complex* x, Complex* y);

inline void cgemm(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  cgemm(active_backend(), n, a, b, c);
}
inline void cgemv(std::size_t n, const Complex* a, const Complex* x, Complex* y) {
  cgemv(active_backend(), n, a, x, y);
}

namespace detail {
void cgemm_scalar(std::size_t n, const Complex* a, const Complex* b, Complex* c);
void cgemv_scalar(std::size_t n, const Complex* a, const Complex* x, Complex* y);
void cgemm_avx2(std::size_t n, const Complex* a, const Complex* b, Complex* c);
void cgemv_avx2(std::size_t n, const Complex* a, const Complex* x, Complex* y);
}  // namespace detail

}  // namespace isg::kernels
