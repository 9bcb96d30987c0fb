#include <cstdlib>
#include <string_view>

#include "isg/kernels.hpp"

namespace isg::kernels {

bool backend_available(Backend b) {
  if (b == Backend::kScalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend chosen = [] {
    const char* env = std::getenv("ISG_KERNELS");
    if (env && std::string_view(env) == "scalar") return Backend::kScalar;
    return backend_available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
  }();
  return chosen;
}

const char* backend_name(Backend b) { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

void cgemm(Backend backend, std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  if (backend == Backend::kAvx2 && backend_available(backend)) return detail::cgemm_avx2(n, a, b, c);
  detail::cgemm_scalar(n, a, b, c);
}

void cgemv(Backend backend, std::size_t n, const Complex* a, const Complex* x, Complex* y) {
  if (backend == Backend::kAvx2 && backend_available(backend)) return detail::cgemv_avx2(n, a, x, y);
  detail::cgemv_scalar(n, a, x, y);
}

}  // namespace isg::kernels
