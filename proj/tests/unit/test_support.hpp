#pragma once

#include <complex>
#include <random>

#include "fracstab/complex.hpp"

namespace fracstab::testing {

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

/// Uniform point in the rectangle [re_lo, re_hi] x [im_lo, im_hi].
inline Complex uniform_complex(std::mt19937_64& rng, double re_lo, double re_hi, double im_lo, double im_hi) {
  std::uniform_real_distribution<double> re(re_lo, re_hi);
  std::uniform_real_distribution<double> im(im_lo, im_hi);
  const double a = re(rng);
  return {a, im(rng)};
}

}  // namespace fracstab::testing
