#pragma once

#include "fracstab/complex.hpp"

namespace fracstab {

/// Principal log-Gamma. Lanczos (g = 7, nine coefficients) evaluated in log
/// form on Re z >= 1/2 and the reflection formula on the left half-plane.
/// The imaginary part is reduced to (-pi, pi], so exp(log_gamma(z)) == Gamma(z)
/// but log_gamma is not the analytically continued loggamma.
///
/// Throws PoleError when z is within 1e-14 of 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// base^exponent on the principal branch, exp(exponent * Log base) with
/// arg in (-pi, pi]. 0^a is 0 when Re(a) > 0 and a DomainError otherwise.
///
/// The stability theory only ever raises 1 - 1/z with |z| > 1 (or
/// 2 sin(t/2) > 0) to the power alpha. Re(1 - 1/z) > 0 there, so every base
/// stays in the open right half-plane and never reaches the branch cut.
Complex cpow_principal(Complex base, Complex exponent);

}  // namespace fracstab
