#include "fracstab/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracstab/errors.hpp"

namespace fracstab {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kPoleTolerance = 1e-14;

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::remainder(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

// Principal Log with arg in (-pi, pi]; std::log maps -x - 0i to arg -pi.
Complex principal_log(Complex z) {
  double arg = std::arg(z);
  if (arg == -std::numbers::pi) arg = std::numbers::pi;
  return {std::log(std::abs(z)), arg};
}

// Valid for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczosCoefficients[0];
  for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
    series += kLanczosCoefficients[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (z.real() <= 0.5) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= kPoleTolerance) {
      throw PoleError("log_gamma: pole at " + format_complex(z));
    }
  }
  Complex result;
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    result = std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) - lanczos_log_gamma(1.0 - z);
  } else {
    result = lanczos_log_gamma(z);
  }
  return {result.real(), wrap_angle(result.imag())};
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex cpow_principal(Complex base, Complex exponent) {
  if (base == Complex(0.0, 0.0)) {
    if (exponent.real() > 0.0) return {0.0, 0.0};
    throw DomainError("cpow_principal: 0 raised to " + format_complex(exponent));
  }
  return std::exp(exponent * principal_log(base));
}

}  // namespace fracstab
