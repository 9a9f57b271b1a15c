#include "fracstab/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fracstab/errors.hpp"
#include "fracstab/kernel.hpp"

namespace fracstab {

ComplexMatrix MapSpec::jacobian_at(const ComplexVector& point) const {
  return jacobian ? jacobian(point) : numerical_jacobian(*this, point);
}

namespace {

// Per-component split history, appended one time step at a time.
class SplitHistory {
 public:
  SplitHistory(std::size_t dimension, std::size_t reserve) : re_(dimension), im_(dimension) {
    for (std::size_t c = 0; c < dimension; ++c) {
      re_[c].reserve(reserve);
      im_[c].reserve(reserve);
    }
  }

  void push(const ComplexVector& x) {
    for (std::size_t c = 0; c < re_.size(); ++c) {
      re_[c].push_back(x[c].real());
      im_[c].push_back(x[c].imag());
    }
  }

  simd::SplitView component(std::size_t c) const { return {re_[c].data(), im_[c].data()}; }

 private:
  std::vector<std::vector<double>> re_;
  std::vector<std::vector<double>> im_;
};

bool diverged(const ComplexVector& x, double cutoff) {
  const double n = norm2(x);
  return !std::isfinite(n) || n > cutoff;
}

void check_dimension(std::size_t expected, const ComplexVector& x0, const char* what) {
  if (x0.empty()) throw DimensionError(std::string(what) + ": empty initial state");
  if (x0.size() != expected) throw DimensionError(std::string(what) + ": initial state dimension mismatch");
}

}  // namespace

Trajectory simulate_linear(const ComplexOrder& order, const ComplexMatrix& a, const ComplexVector& x0,
                           std::size_t steps, const SolverOptions& options) {
  if (!a.square()) throw DimensionError("simulate_linear: matrix is not square");
  check_dimension(a.rows(), x0, "simulate_linear");
  const std::size_t dim = x0.size();
  const simd::Backend backend = options.backend.value_or(simd::active_backend());
  const ComplexMatrix shifted = a - ComplexMatrix::identity(dim);
  const PhiKernel kernel(order, steps);

  Trajectory traj{order, {x0}, std::nullopt};
  traj.states.reserve(steps + 1);
  if (diverged(x0, options.divergence_cutoff)) {
    traj.diverged_at = 0;
    return traj;
  }
  SplitHistory history(dim, steps + 1);
  history.push(x0);

  ComplexVector conv(dim);
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t c = 0; c < dim; ++c) conv[c] = simd::reversed_dot(backend, kernel.view(), history.component(c), t + 1);
    ComplexVector next = shifted * conv;
    for (std::size_t c = 0; c < dim; ++c) next[c] += x0[c];
    traj.states.push_back(next);
    if (diverged(next, options.divergence_cutoff)) {
      traj.diverged_at = t + 1;
      break;
    }
    history.push(next);
  }
  return traj;
}

Trajectory simulate_nonlinear(const ComplexOrder& order, const MapSpec& map, const ComplexVector& x0,
                              std::size_t steps, const SolverOptions& options) {
  if (!map.f) throw std::invalid_argument("simulate_nonlinear: map has no function");
  check_dimension(map.dimension, x0, "simulate_nonlinear");
  const std::size_t dim = x0.size();
  const simd::Backend backend = options.backend.value_or(simd::active_backend());
  const PhiKernel kernel(order, steps);

  Trajectory traj{order, {x0}, std::nullopt};
  traj.states.reserve(steps + 1);
  if (diverged(x0, options.divergence_cutoff)) {
    traj.diverged_at = 0;
    return traj;
  }
  SplitHistory forcing(dim, steps);

  ComplexVector x = x0;
  for (std::size_t t = 1; t <= steps; ++t) {
    ComplexVector g = map.f(x);
    if (g.size() != dim) throw DimensionError("simulate_nonlinear: map changed dimension");
    for (std::size_t c = 0; c < dim; ++c) g[c] -= x[c];
    forcing.push(g);

    for (std::size_t c = 0; c < dim; ++c) x[c] = x0[c] + simd::reversed_dot(backend, kernel.view(), forcing.component(c), t);
    traj.states.push_back(x);
    if (diverged(x, options.divergence_cutoff)) {
      traj.diverged_at = t;
      break;
    }
  }
  return traj;
}

ComplexMatrix numerical_jacobian(const MapSpec& map, const ComplexVector& point) {
  const std::size_t n = point.size();
  const double h = 1e-6 * std::max(1.0, norm2(point));
  ComplexMatrix jac(n, n);
  ComplexVector probe = point;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex steps[2] = {Complex(h, 0.0), Complex(0.0, h)};
    ComplexVector sum(n, Complex(0.0, 0.0));
    for (const Complex step : steps) {
      probe[j] = point[j] + step;
      const ComplexVector plus = map.f(probe);
      probe[j] = point[j] - step;
      const ComplexVector minus = map.f(probe);
      probe[j] = point[j];
      for (std::size_t i = 0; i < n; ++i) sum[i] += (plus[i] - minus[i]) / (2.0 * step);
    }
    for (std::size_t i = 0; i < n; ++i) jac(i, j) = 0.5 * sum[i];
  }
  return jac;
}

}  // namespace fracstab
