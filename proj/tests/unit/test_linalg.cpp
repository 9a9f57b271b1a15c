#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

#include "fracstab/errors.hpp"
#include "fracstab/linalg.hpp"
#include "test_support.hpp"

using namespace fracstab;

namespace {

// Greedy matching distance between two eigenvalue multisets.
double match_distance(ComplexVector a, ComplexVector b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const Complex& p, const Complex& q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*it - x));
    b.erase(it);
  }
  return worst;
}

ComplexVector eigen_oracle(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a(r, c);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  ComplexVector out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

}  // namespace

TEST_CASE("small closed forms") {
  CHECK(eigenvalues(ComplexMatrix{{Complex(0.2, 0.5)}})[0] == Complex(0.2, 0.5));
  const ComplexVector e = eigenvalues(ComplexMatrix{{-0.2, 0.1}, {-0.1, -0.2}});
  CHECK(match_distance(e, {Complex(-0.2, 0.1), Complex(-0.2, -0.1)}) < 1e-15);
  const ComplexVector z = eigenvalues(ComplexMatrix{{0.0, 0.0}, {0.0, 0.0}});
  CHECK(z[0] == Complex(0.0, 0.0));
  CHECK(z[1] == Complex(0.0, 0.0));
  CHECK_THROWS_AS(eigenvalues(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("agrees with Eigen on random matrices") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 16; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      ComplexMatrix a(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = fracstab::testing::uniform_complex(rng, -1, 1, -1, 1);
      CAPTURE(n);
      CHECK(match_distance(eigenvalues(a), eigen_oracle(a)) < 1e-9);
    }
  }
}

TEST_CASE("structured matrices") {
  // Triangular: eigenvalues are the diagonal.
  ComplexMatrix t(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = r; c < 5; ++c) t(r, c) = Complex(r + 1.0, c - r * 0.5);
  CHECK(match_distance(eigenvalues(t), eigen_oracle(t)) < 1e-10);

  // Cyclic permutation: roots of unity.
  ComplexMatrix p(6, 6);
  for (std::size_t r = 0; r < 6; ++r) p(r, (r + 1) % 6) = 1.0;
  ComplexVector roots;
  for (int k = 0; k < 6; ++k) roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 6.0));
  CHECK(match_distance(eigenvalues(p), roots) < 1e-10);

  const ComplexVector id = eigenvalues(ComplexMatrix::identity(4));
  for (const Complex& e : id) CHECK(std::abs(e - 1.0) < 1e-14);
}
