#include <doctest.h>

#include "fracstab/errors.hpp"
#include "fracstab/linalg.hpp"
#include "fracstab/solver.hpp"
#include "fracstab/stability.hpp"
#include "fracstab/systems.hpp"

using namespace fracstab;

namespace {

const ComplexOrder kLogistic(0.8, 0.7);
const ComplexOrder kCoupled(0.7, 0.4);

}  // namespace

TEST_CASE("logistic equilibria and derivatives") {
  const auto eq = logistic_equilibria({1.5});
  REQUIRE(eq.size() == 2);
  CHECK(eq[0][0] == Complex(0.0, 0.0));
  CHECK(std::abs(eq[1][0] - 1.0 / 3.0) < 1e-15);
  const MapSpec f = logistic_map({1.5});
  CHECK(f.jacobian_at({0.0})(0, 0) == Complex(1.5, 0.0));
  CHECK(std::abs(f.jacobian_at(eq[1])(0, 0) - 0.5) < 1e-15);

  const auto eq2 = logistic_equilibria({-0.1});
  REQUIRE(eq2.size() == 2);
  CHECK(std::abs(eq2[1][0] - 11.0) < 1e-12);

  const auto eq3 = logistic_equilibria({1.0});
  CHECK(eq3.back()[0] == Complex(0.0, 0.0));
  CHECK(logistic_equilibria({0.0}).size() == 1);

  // f'(x2*) = 2 - lambda.
  for (double lambda : {-3.0, -0.1, 0.5, 1.5, 2.7, 4.0}) {
    const auto e = logistic_equilibria({lambda});
    CHECK(std::abs(logistic_map({lambda}).jacobian_at(e[1])(0, 0) - (2.0 - lambda)) < 1e-12);
  }
}

TEST_CASE("coupled map jacobian") {
  const MapSpec f = coupled_map({-0.2, 0.1});
  const ComplexVector ev = eigenvalues(f.jacobian_at({0.0, 0.0}));
  REQUIRE(ev.size() == 2);
  const bool order_a = std::abs(ev[0] - Complex(-0.2, 0.1)) < 1e-14 && std::abs(ev[1] - Complex(-0.2, -0.1)) < 1e-14;
  const bool order_b = std::abs(ev[1] - Complex(-0.2, 0.1)) < 1e-14 && std::abs(ev[0] - Complex(-0.2, -0.1)) < 1e-14;
  CHECK((order_a || order_b));

  const ComplexVector zero = eigenvalues(coupled_map({0.0, 0.0}).jacobian_at({0.0, 0.0}));
  CHECK(zero == ComplexVector{0.0, 0.0});

  // Analytic Jacobian against finite differences, at the origin and elsewhere.
  for (const ComplexVector& p : {ComplexVector{0.0, 0.0}, ComplexVector{Complex(0.3, 0.1), -0.7}}) {
    const ComplexMatrix a = f.jacobian_at(p);
    const ComplexMatrix n = numerical_jacobian(f, p);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(a(r, c) - n(r, c)) < 1e-6);
  }
  CHECK(coupled_equilibria({-0.2, 0.1}) == std::vector<ComplexVector>{{0.0, 0.0}});
}

TEST_CASE("equilibrium verdicts") {
  CHECK(equilibrium_verdict(kLogistic, logistic_map({-0.1}), {0.0}).status == Status::Stable);
  CHECK(equilibrium_verdict(kLogistic, logistic_map({1.5}), {0.0}).status == Status::Unstable);
  CHECK(equilibrium_verdict(kLogistic, logistic_map({1.5}), {1.0 / 3.0}).status == Status::Stable);
  CHECK(equilibrium_verdict(kLogistic, logistic_map({-0.1}), {11.0}).status == Status::Unstable);
  CHECK(equilibrium_verdict(kCoupled, coupled_map({-0.2, 0.1}), {0.0, 0.0}).status == Status::Stable);
  CHECK(equilibrium_verdict(kCoupled, coupled_map({-0.2, 0.5}), {0.0, 0.0}).status == Status::Unstable);
  CHECK_THROWS_AS(equilibrium_verdict(kLogistic, logistic_map({1.5}), {0.5}), NotAnEquilibriumError);
}

TEST_CASE("one-dimensional reductions") {
  for (double lambda : {-0.25, -0.1, 0.3, 0.6, 1.03, 1.5, 1.9}) {
    const MapSpec f = logistic_map({lambda});
    const auto eq = logistic_equilibria({lambda});
    CAPTURE(lambda);
    CHECK(equilibrium_verdict(kLogistic, f, eq[0]).status == classify_lambda(kLogistic, lambda).status);
    CHECK(equilibrium_verdict(kLogistic, f, eq[1]).status == classify_lambda(kLogistic, 2.0 - lambda).status);
  }
}

TEST_CASE("stable verdicts attract nearby orbits") {
  struct Case {
    MapSpec map;
    ComplexOrder order;
    ComplexVector eq;
  };
  const Case cases[] = {
      {logistic_map({-0.1}), kLogistic, {0.0}},
      {logistic_map({1.5}), kLogistic, {1.0 / 3.0}},
      {coupled_map({-0.2, 0.1}), kCoupled, {0.0, 0.0}},
  };
  for (const auto& c : cases) {
    REQUIRE(equilibrium_verdict(c.order, c.map, c.eq).status == Status::Stable);
    ComplexVector x0 = c.eq;
    for (auto& x : x0) x += 0.035;
    const Trajectory tr = simulate_nonlinear(c.order, c.map, x0, 1000);
    REQUIRE_FALSE(tr.diverged_at);
    ComplexVector d0(x0.size()), dt(x0.size());
    for (std::size_t k = 0; k < x0.size(); ++k) {
      d0[k] = x0[k] - c.eq[k];
      dt[k] = tr.states.back()[k] - c.eq[k];
    }
    CHECK(norm2(dt) < norm2(d0) / 10.0);
  }
}

TEST_CASE("system registry") {
  const auto names = system_names();
  CHECK(names == std::vector<std::string>{"linear", "logistic", "coupled2d"});

  const auto lin = make_system("linear", {{"lambda", Complex(0.2, 0.5)}});
  REQUIRE(lin);
  CHECK(lin->map.f({1.0})[0] == Complex(0.2, 0.5));
  CHECK(lin->equilibria == std::vector<ComplexVector>{{0.0}});

  const auto cpl = make_system("coupled2d", {{"lambda", -0.2}, {"mu", 0.5}});
  REQUIRE(cpl);
  CHECK(cpl->map.dimension == 2);

  CHECK_FALSE(make_system("henon", {}));
  CHECK_THROWS_WITH_AS(make_system("logistic", {}), doctest::Contains("lambda"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_system("logistic", {{"lambda", Complex(1.0, 1.0)}}), doctest::Contains("real"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_system("logistic", {{"lambda", 1.5}, {"nu", 1.0}}), doctest::Contains("nu"),
                       std::invalid_argument);
}
