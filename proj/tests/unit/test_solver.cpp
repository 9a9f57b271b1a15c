#include <doctest.h>

#include <chrono>
#include <random>

#include "fracstab/errors.hpp"
#include "fracstab/solver.hpp"
#include "fracstab/systems.hpp"
#include "test_support.hpp"

using namespace fracstab;

namespace {

const ComplexOrder kDiagonal(std::sqrt(0.5), std::sqrt(0.5));
const ComplexOrder kLogisticOrder(0.8, 0.7);

}  // namespace

TEST_CASE("alpha = 1 linear reduces to plain iteration") {
  const Trajectory tr = simulate_linear(ComplexOrder(1.0, 0.0), ComplexMatrix{{0.5}}, {1.0}, 40);
  REQUIRE(tr.states.size() == 41);
  CHECK_FALSE(tr.diverged_at);
  for (std::size_t t = 0; t <= 40; ++t) CHECK(tr.states[t][0] == Complex(std::ldexp(1.0, -static_cast<int>(t)), 0.0));
}

TEST_CASE("alpha = 1 nonlinear reduces to plain iteration") {
  const MapSpec f = logistic_map({2.5});
  const Trajectory tr = simulate_nonlinear(ComplexOrder(1.0, 0.0), f, {0.3}, 100);
  Complex x = 0.3;
  for (std::size_t t = 0; t <= 100; ++t) {
    CHECK(std::abs(tr.states[t][0] - x) < 1e-12);
    x = 2.5 * x * (1.0 - x);
  }
}

TEST_CASE("linear and nonlinear paths agree") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + trial % 3;
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.4 * fracstab::testing::uniform_complex(rng, -1, 1, -1, 1);
    ComplexVector x0(n);
    for (auto& x : x0) x = fracstab::testing::uniform_complex(rng, -1, 1, -1, 1);
    const ComplexOrder order(fracstab::testing::uniform_complex(rng, 0.2, 1.0, -0.8, 0.8));

    const Trajectory lin = simulate_linear(order, a, x0, 150);
    const Trajectory non = simulate_nonlinear(order, linear_map(a), x0, 150);
    REQUIRE(lin.states.size() == non.states.size());
    double worst = 0.0;
    for (std::size_t t = 0; t < lin.states.size(); ++t) {
      for (std::size_t c = 0; c < n; ++c) {
        worst = std::max(worst, std::abs(lin.states[t][c] - non.states[t][c]) / (1.0 + std::abs(lin.states[t][c])));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("identity map and equilibria stay fixed") {
  MapSpec identity;
  identity.dimension = 2;
  identity.f = [](const ComplexVector& x) { return x; };
  const Trajectory tr = simulate_nonlinear(kLogisticOrder, identity, {Complex(1.0, 2.0), -3.0}, 50);
  for (const auto& s : tr.states) CHECK(s == ComplexVector{Complex(1.0, 2.0), -3.0});

  const Trajectory eq = simulate_nonlinear(kLogisticOrder, logistic_map({1.5}), {1.0 / 3.0}, 200);
  for (const auto& s : eq.states) CHECK(std::abs(s[0] - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("simd backends give the same trajectory") {
  const MapSpec f = coupled_map({-0.2, 0.1});
  SolverOptions scalar;
  scalar.backend = simd::Backend::Scalar;
  SolverOptions vector;
  vector.backend = simd::Backend::Avx2;
  const Trajectory a = simulate_nonlinear(ComplexOrder(0.7, 0.4), f, {0.1, 0.1}, 300, scalar);
  const Trajectory b = simulate_nonlinear(ComplexOrder(0.7, 0.4), f, {0.1, 0.1}, 300, vector);
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    CHECK(std::abs(a.states[t][0] - b.states[t][0]) < 1e-13);
    CHECK(std::abs(a.states[t][1] - b.states[t][1]) < 1e-13);
  }
}

TEST_CASE("logistic dynamics at alpha = 0.8+0.7i") {
  const Trajectory to_third = simulate_nonlinear(kLogisticOrder, logistic_map({1.5}), {0.3}, 1000);
  CHECK_FALSE(to_third.diverged_at);
  CHECK(std::abs(to_third.states.back()[0] - 1.0 / 3.0) < 0.01);

  const Trajectory blowup = simulate_nonlinear(kLogisticOrder, logistic_map({-0.1}), {10.2}, 500);
  REQUIRE(blowup.diverged_at);
  CHECK(*blowup.diverged_at < 100);
  CHECK(blowup.states.size() == *blowup.diverged_at + 1);
  CHECK(norm2(blowup.states.back()) > 1e10);
}

TEST_CASE("linear dynamics at alpha = exp(i pi/4)") {
  // lambda = 0.2+0.5i sits outside the stable region for this order (winding
  // number 0, one characteristic root outside the unit circle): the orbit
  // first shrinks, then grows without bound.
  const Trajectory outside = simulate_linear(kDiagonal, ComplexMatrix{{Complex(0.2, 0.5)}}, {1.0}, 600);
  REQUIRE(outside.diverged_at);
  CHECK(*outside.diverged_at > 250);

  // 0.1-2i is unstable but only 4e-3 away from the curve, so growth is slow.
  const Trajectory near = simulate_linear(kDiagonal, ComplexMatrix{{Complex(0.1, -2.0)}}, {1.0}, 500);
  CHECK_FALSE(near.diverged_at);
  CHECK(std::abs(near.states[500][0]) > 5.0);
  const Trajectory longer = simulate_linear(kDiagonal, ComplexMatrix{{Complex(0.1, -2.0)}}, {1.0}, 6000);
  CHECK(longer.diverged_at);
}

TEST_CASE("divergence cutoff is configurable") {
  SolverOptions options;
  options.divergence_cutoff = 100.0;
  const Trajectory tr = simulate_linear(ComplexOrder(1.0, 0.0), ComplexMatrix{{2.0}}, {1.0}, 50, options);
  REQUIRE(tr.diverged_at);
  CHECK(*tr.diverged_at == 7);  // 2^7 = 128 > 100
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(simulate_linear(kLogisticOrder, ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}, {1.0}, 5), DimensionError);
  CHECK_THROWS_AS(simulate_nonlinear(kLogisticOrder, logistic_map({1.5}), {1.0, 2.0}, 5), DimensionError);
}

TEST_CASE("numerical jacobian") {
  const ComplexMatrix m{{Complex(0.1, 0.2), -1.0}, {Complex(0.0, 3.0), 0.5}};
  const ComplexMatrix j = numerical_jacobian(linear_map(m), {Complex(4.0, -2.0), 1.0});
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(j(r, c) - m(r, c)) < 1e-8);

  MapSpec logistic = logistic_map({1.5});
  logistic.jacobian = nullptr;
  CHECK(std::abs(numerical_jacobian(logistic, {0.0})(0, 0) - 1.5) < 1e-8);
  CHECK(std::abs(numerical_jacobian(logistic, {1.0 / 3.0})(0, 0) - 0.5) < 1e-8);
  CHECK(std::abs(logistic.jacobian_at({1.0 / 3.0})(0, 0) - 0.5) < 1e-8);
}

TEST_CASE("cost grows quadratically with the horizon") {
  const MapSpec f = logistic_map({1.5});
  auto time_run = [&](std::size_t steps) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const Trajectory tr = simulate_nonlinear(kLogisticOrder, f, {0.3}, steps);
      const auto t1 = std::chrono::steady_clock::now();
      REQUIRE(tr.states.size() == steps + 1);
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
  };
  const double t1 = time_run(20000);
  const double t2 = time_run(40000);
  const double ratio = t2 / t1;
  MESSAGE("T -> 2T time ratio " << ratio);
  // Loose bounds: timing noise on shared machines is large.
  CHECK(ratio > 2.0);
  CHECK(ratio < 8.0);
}
