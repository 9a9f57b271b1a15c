#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracstab/complex.hpp"
#include "fracstab/order.hpp"
#include "fracstab/simd/complex_dot.hpp"

namespace fracstab {

/// Memory weights phi(n) = binom(n + alpha - 1, n), n = 0..capacity().
///
/// Generated by the ratio recurrence phi(n) = phi(n-1) (n - 1 + alpha) / n,
/// which avoids Gamma overflow for long horizons. Weights are kept split into
/// real and imaginary arrays so the convolution kernels can stream them.
class PhiKernel {
 public:
  PhiKernel(ComplexOrder order, std::size_t n_max);

  const ComplexOrder& order() const { return order_; }
  /// Highest index with a stored weight.
  std::size_t capacity() const { return re_.size() - 1; }

  Complex operator[](std::size_t n) const { return {re_[n], im_[n]}; }
  std::span<const double> real() const { return re_; }
  std::span<const double> imag() const { return im_; }
  simd::SplitView view() const { return {re_.data(), im_.data()}; }

  /// Grows storage so that capacity() >= n_max. Capacity at least doubles on
  /// each growth. Not thread-safe; a kernel shared between threads must be
  /// sized up front.
  void extend_to(std::size_t n_max);

 private:
  void fill(std::size_t from, std::size_t to);

  ComplexOrder order_;
  std::vector<double> re_;
  std::vector<double> im_;
};

PhiKernel phi_coefficients(const ComplexOrder& order, std::size_t n_max);

/// (phi * x)(n) = sum_{s=0}^{n} phi(n-s) x(s), componentwise.
/// Requires series.size() > n and kernel.capacity() >= n; throws
/// CapacityError / DimensionError otherwise.
ComplexVector convolve_at(const PhiKernel& kernel, std::span<const ComplexVector> series, std::size_t n);

}  // namespace fracstab
