#pragma once

// Reversed complex dot product, the inner loop of every long-memory
// convolution in the solver:
//
//     sum_{k=0}^{count-1} w[count-1-k] * x[k]
//
// Operands are split (structure-of-arrays) real/imaginary buffers. A scalar
// reference kernel is always built; the AVX2/FMA kernel is compiled on x86
// when FRACSTAB_HAVE_AVX2_KERNEL is defined and picked at runtime when the
// CPU supports it.

#include <cstddef>
#include <string_view>

#include "fracstab/complex.hpp"

namespace fracstab::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

struct SplitView {
  const double* re;
  const double* im;
};

Complex reversed_dot_scalar(SplitView w, SplitView x, std::size_t count);

#if defined(FRACSTAB_HAVE_AVX2_KERNEL)
Complex reversed_dot_avx2(SplitView w, SplitView x, std::size_t count);
#endif

/// True when the AVX2 kernel is compiled in and the CPU reports AVX2 + FMA.
bool avx2_available();

/// Backend chosen once per process: AVX2 when available, unless the
/// environment variable FRACSTAB_SIMD=scalar forces the reference kernel.
Backend active_backend();

/// Dispatches to the requested backend. Requesting Avx2 where it is not
/// available falls back to the scalar kernel.
Complex reversed_dot(Backend backend, SplitView w, SplitView x, std::size_t count);

inline Complex reversed_dot(SplitView w, SplitView x, std::size_t count) {
  return reversed_dot(active_backend(), w, x, count);
}

}  // namespace fracstab::simd
