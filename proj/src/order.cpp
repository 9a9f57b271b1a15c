#include "fracstab/order.hpp"

#include <cmath>

#include "fracstab/errors.hpp"

namespace fracstab {

ComplexOrder::ComplexOrder(double u, double v) : u_(u), v_(v) {
  if (!std::isfinite(u) || !std::isfinite(v)) throw OrderError("order: non-finite component");
  if (!(u > 0.0 && u <= 1.0)) {
    throw OrderError("order: Re(alpha) = " + format_real(u) + " outside (0, 1]");
  }
}

std::optional<ComplexOrder> ComplexOrder::try_make(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || !(u > 0.0 && u <= 1.0)) return std::nullopt;
  return ComplexOrder(u, v);
}

std::optional<ComplexOrder> ComplexOrder::parse(std::string_view text) {
  const auto z = parse_complex(text);
  if (!z) return std::nullopt;
  return try_make(z->real(), z->imag());
}

}  // namespace fracstab
