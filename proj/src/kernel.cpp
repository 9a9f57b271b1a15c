#include "fracstab/kernel.hpp"

#include <algorithm>
#include <string>

#include "fracstab/errors.hpp"

namespace fracstab {

PhiKernel::PhiKernel(ComplexOrder order, std::size_t n_max) : order_(order) {
  re_.assign(1, 1.0);
  im_.assign(1, 0.0);
  extend_to(n_max);
}

void PhiKernel::extend_to(std::size_t n_max) {
  const std::size_t have = capacity();
  if (n_max <= have) return;
  const std::size_t target = std::max(n_max, 2 * have + 1);
  re_.resize(target + 1);
  im_.resize(target + 1);
  fill(have + 1, target);
}

void PhiKernel::fill(std::size_t from, std::size_t to) {
  const double u = order_.u();
  const double v = order_.v();
  Complex w(re_[from - 1], im_[from - 1]);
  for (std::size_t n = from; n <= to; ++n) {
    const double nd = static_cast<double>(n);
    w *= Complex(nd - 1.0 + u, v) / nd;
    re_[n] = w.real();
    im_[n] = w.imag();
  }
}

PhiKernel phi_coefficients(const ComplexOrder& order, std::size_t n_max) { return PhiKernel(order, n_max); }

ComplexVector convolve_at(const PhiKernel& kernel, std::span<const ComplexVector> series, std::size_t n) {
  if (kernel.capacity() < n) {
    throw CapacityError("convolve_at: kernel capacity " + std::to_string(kernel.capacity()) + " < n = " +
                        std::to_string(n));
  }
  if (series.size() <= n) throw DimensionError("convolve_at: series shorter than n + 1");
  const std::size_t dim = series[0].size();
  std::vector<double> re(n + 1);
  std::vector<double> im(n + 1);
  ComplexVector out(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t s = 0; s <= n; ++s) {
      if (series[s].size() != dim) throw DimensionError("convolve_at: inconsistent dimension");
      re[s] = series[s][c].real();
      im[s] = series[s][c].imag();
    }
    out[c] = simd::reversed_dot(kernel.view(), {re.data(), im.data()}, n + 1);
  }
  return out;
}

}  // namespace fracstab
