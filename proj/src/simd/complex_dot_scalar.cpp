#include "fracstab/simd/complex_dot.hpp"

namespace fracstab::simd {

Complex reversed_dot_scalar(SplitView w, SplitView x, std::size_t count) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t j = count - 1 - k;
    acc_re += w.re[j] * x.re[k] - w.im[j] * x.im[k];
    acc_im += w.re[j] * x.im[k] + w.im[j] * x.re[k];
  }
  return {acc_re, acc_im};
}

}  // namespace fracstab::simd
