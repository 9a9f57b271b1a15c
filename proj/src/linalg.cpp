#include "fracstab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fracstab/errors.hpp"

namespace fracstab {
namespace {

ComplexVector eigen2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_trace = 0.5 * (a + d);
  const Complex det = a * d - b * c;
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  // Larger-magnitude root first, the other from the determinant.
  const Complex r1 = std::abs(half_trace + disc) >= std::abs(half_trace - disc) ? half_trace + disc : half_trace - disc;
  const Complex r2 = r1 == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : det / r1;
  return {r1, r2};
}

void reduce_to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0, 0.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;

    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = h(i, k) - (i == k + 1 ? alpha : Complex(0.0, 0.0));
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double scale = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= scale;

    // H <- (I - 2 v v^H) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * s;
    }
    // H <- H (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

struct Givens {
  Complex c;
  Complex s;
};

Givens make_givens(Complex x, Complex y) {
  const double r = std::hypot(std::abs(x), std::abs(y));
  if (r == 0.0) return {Complex(1.0, 0.0), Complex(0.0, 0.0)};
  return {x / r, y / r};
}

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex m1 = mid + disc;
  const Complex m2 = mid - disc;
  return std::abs(m1 - d) <= std::abs(m2 - d) ? m1 : m2;
}

}  // namespace

ComplexVector eigenvalues(const ComplexMatrix& a, const EigenOptions& options) {
  if (!a.square()) throw DimensionError("eigenvalues: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  if (n == 1) return {a(0, 0)};
  if (n == 2) return eigen2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));

  ComplexMatrix h = a;
  reduce_to_hessenberg(h);

  ComplexVector eig(n);
  std::vector<Givens> rotations(n);
  std::size_t hi = n - 1;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;

  while (true) {
    // Deflate negligible subdiagonal entries.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      const double diag = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (sub <= options.tolerance * (diag == 0.0 ? 1.0 : diag)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      if (hi == 0) break;
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++sweeps > options.max_sweeps) {
      throw IndeterminateError("eigenvalues: QR iteration did not converge after " +
                               std::to_string(options.max_sweeps) + " sweeps");
    }
    ++since_deflation;

    Complex mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    if (since_deflation % 11 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    }

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rotations[k] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex top = h(k, j);
        const Complex bottom = h(k + 1, j);
        h(k, j) = std::conj(g.c) * top + std::conj(g.s) * bottom;
        h(k + 1, j) = -g.s * top + g.c * bottom;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = rotations[k];
      const std::size_t last_row = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= last_row; ++i) {
        const Complex left = h(i, k);
        const Complex right = h(i, k + 1);
        h(i, k) = left * g.c + right * g.s;
        h(i, k + 1) = -left * std::conj(g.s) + right * std::conj(g.c);
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return eig;
}

}  // namespace fracstab
