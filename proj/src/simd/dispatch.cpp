#include <cstdlib>
#include <string_view>

#include "fracstab/simd/complex_dot.hpp"

namespace fracstab::simd {

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(FRACSTAB_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  static const bool available = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return available;
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend backend = [] {
    const char* forced = std::getenv("FRACSTAB_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
  }();
  return backend;
}

Complex reversed_dot(Backend backend, SplitView w, SplitView x, std::size_t count) {
#if defined(FRACSTAB_HAVE_AVX2_KERNEL)
  if (backend == Backend::Avx2 && avx2_available()) return reversed_dot_avx2(w, x, count);
#else
  (void)backend;
#endif
  return reversed_dot_scalar(w, x, count);
}

}  // namespace fracstab::simd
