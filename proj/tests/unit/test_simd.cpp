#include <doctest.h>

#include <random>
#include <vector>

#include "fracstab/simd/complex_dot.hpp"

using namespace fracstab;
using namespace fracstab::simd;

namespace {

struct Split {
  std::vector<double> re, im;
  SplitView view() const { return {re.data(), im.data()}; }
};

Split random_split(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  Split s;
  for (std::size_t i = 0; i < n; ++i) {
    s.re.push_back(d(rng));
    s.im.push_back(d(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("scalar kernel matches std::complex") {
  std::mt19937_64 rng(3);
  const Split w = random_split(rng, 40), x = random_split(rng, 40);
  Complex want = 0.0;
  for (std::size_t k = 0; k < 40; ++k) want += Complex(w.re[39 - k], w.im[39 - k]) * Complex(x.re[k], x.im[k]);
  CHECK(std::abs(reversed_dot_scalar(w.view(), x.view(), 40) - want) < 1e-13);
  CHECK(reversed_dot_scalar(w.view(), x.view(), 0) == Complex(0.0, 0.0));
}

TEST_CASE("backends agree") {
  INFO("active backend: " << backend_name(active_backend()));
  if (!avx2_available()) {
    MESSAGE("AVX2 kernel not available on this machine; only dispatch fallback is checked");
  }
  std::mt19937_64 rng(12345);
  for (std::size_t n = 0; n <= 67; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const Split w = random_split(rng, n), x = random_split(rng, n);
      const Complex s = reversed_dot(Backend::Scalar, w.view(), x.view(), n);
      const Complex v = reversed_dot(Backend::Avx2, w.view(), x.view(), n);
      double mag = 0.0;
      for (std::size_t k = 0; k < n; ++k) mag += std::hypot(w.re[k], w.im[k]) * std::hypot(x.re[k], x.im[k]);
      CAPTURE(n);
      CHECK(std::abs(s - v) <= 1e-14 * (1.0 + mag));
    }
  }
}

TEST_CASE("long dot product") {
  std::mt19937_64 rng(8);
  const std::size_t n = 10007;
  const Split w = random_split(rng, n), x = random_split(rng, n);
  const Complex s = reversed_dot(Backend::Scalar, w.view(), x.view(), n);
  const Complex v = reversed_dot(Backend::Avx2, w.view(), x.view(), n);
  CHECK(std::abs(s - v) < 1e-10);
}
