#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fracstab/complex.hpp"
#include "fracstab/order.hpp"
#include "fracstab/simd/complex_dot.hpp"

namespace fracstab {

/// A map f: C^n -> C^n, optionally with its analytic Jacobian.
struct MapSpec {
  std::size_t dimension = 1;
  std::function<ComplexVector(const ComplexVector&)> f;
  std::function<ComplexMatrix(const ComplexVector&)> jacobian;  // may be empty

  ComplexMatrix jacobian_at(const ComplexVector& point) const;
};

/// Solution sequence x(0..T). When diverged_at is set the sequence stops at
/// that index and ||states.back()|| exceeded the cutoff (or was not finite).
struct Trajectory {
  ComplexOrder order;
  std::vector<ComplexVector> states;
  std::optional<std::size_t> diverged_at;
};

struct SolverOptions {
  double divergence_cutoff = 1e10;
  /// Convolution kernel; nullopt uses simd::active_backend().
  std::optional<simd::Backend> backend;
};

/// x(t+1) = x0 + (A - I) (phi * x)(t), t = 0 .. steps-1.
Trajectory simulate_linear(const ComplexOrder& order, const ComplexMatrix& a, const ComplexVector& x0,
                           std::size_t steps, const SolverOptions& options = {});

/// x(t) = x0 + sum_{j<t} phi(t-1-j) [f(x(j)) - x(j)], t = 1 .. steps.
/// The forcing g(j) = f(x(j)) - x(j) is cached, so each step costs one
/// evaluation of f plus an O(t) convolution.
Trajectory simulate_nonlinear(const ComplexOrder& order, const MapSpec& map, const ComplexVector& x0,
                              std::size_t steps, const SolverOptions& options = {});

/// Central differences along the real and imaginary axis of each input,
/// averaged. Step 1e-6 * max(1, ||point||).
ComplexMatrix numerical_jacobian(const MapSpec& map, const ComplexVector& point);

}  // namespace fracstab
