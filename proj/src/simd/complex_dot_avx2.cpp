// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "fracstab/simd/complex_dot.hpp"

namespace fracstab::simd {
namespace {

inline __m256d reverse4(__m256d v) { return _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 1, 2, 3)); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

Complex reversed_dot_avx2(SplitView w, SplitView x, std::size_t count) {
  __m256d re0 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd();
  __m256d re1 = _mm256_setzero_pd();
  __m256d im1 = _mm256_setzero_pd();

  // x[k..k+3] pairs with w[count-1-k .. count-4-k], i.e. the reversed block
  // starting at count-4-k.
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    const std::size_t j0 = count - 4 - k;
    const std::size_t j1 = j0 - 4;
    const __m256d wr0 = reverse4(_mm256_loadu_pd(w.re + j0));
    const __m256d wi0 = reverse4(_mm256_loadu_pd(w.im + j0));
    const __m256d wr1 = reverse4(_mm256_loadu_pd(w.re + j1));
    const __m256d wi1 = reverse4(_mm256_loadu_pd(w.im + j1));
    const __m256d xr0 = _mm256_loadu_pd(x.re + k);
    const __m256d xi0 = _mm256_loadu_pd(x.im + k);
    const __m256d xr1 = _mm256_loadu_pd(x.re + k + 4);
    const __m256d xi1 = _mm256_loadu_pd(x.im + k + 4);
    re0 = _mm256_fmadd_pd(wr0, xr0, re0);
    re0 = _mm256_fnmadd_pd(wi0, xi0, re0);
    im0 = _mm256_fmadd_pd(wr0, xi0, im0);
    im0 = _mm256_fmadd_pd(wi0, xr0, im0);
    re1 = _mm256_fmadd_pd(wr1, xr1, re1);
    re1 = _mm256_fnmadd_pd(wi1, xi1, re1);
    im1 = _mm256_fmadd_pd(wr1, xi1, im1);
    im1 = _mm256_fmadd_pd(wi1, xr1, im1);
  }
  for (; k + 4 <= count; k += 4) {
    const std::size_t j0 = count - 4 - k;
    const __m256d wr = reverse4(_mm256_loadu_pd(w.re + j0));
    const __m256d wi = reverse4(_mm256_loadu_pd(w.im + j0));
    const __m256d xr = _mm256_loadu_pd(x.re + k);
    const __m256d xi = _mm256_loadu_pd(x.im + k);
    re0 = _mm256_fmadd_pd(wr, xr, re0);
    re0 = _mm256_fnmadd_pd(wi, xi, re0);
    im0 = _mm256_fmadd_pd(wr, xi, im0);
    im0 = _mm256_fmadd_pd(wi, xr, im0);
  }

  double acc_re = hsum(_mm256_add_pd(re0, re1));
  double acc_im = hsum(_mm256_add_pd(im0, im1));
  for (; k < count; ++k) {
    const std::size_t j = count - 1 - k;
    acc_re += w.re[j] * x.re[k] - w.im[j] * x.im[k];
    acc_im += w.re[j] * x.im[k] + w.im[j] * x.re[k];
  }
  return {acc_re, acc_im};
}

}  // namespace fracstab::simd
