#pragma once

#include <optional>
#include <string_view>

#include "fracstab/complex.hpp"

namespace fracstab {

/// Complex fractional order alpha = u + iv.
///
/// Re alpha must lie in (0, 1]. The classical first-order case alpha = 1 is
/// admitted so that the fractional machinery can be checked against plain
/// iteration; any v (including 0) is allowed.
class ComplexOrder {
 public:
  /// Throws OrderError when u is outside (0, 1] or either part is not finite.
  ComplexOrder(double u, double v);
  explicit ComplexOrder(Complex alpha) : ComplexOrder(alpha.real(), alpha.imag()) {}

  static std::optional<ComplexOrder> try_make(double u, double v);
  /// Parses a complex literal such as `0.8+0.7i`.
  static std::optional<ComplexOrder> parse(std::string_view text);

  double u() const { return u_; }
  double v() const { return v_; }
  Complex value() const { return {u_, v_}; }

  friend bool operator==(const ComplexOrder&, const ComplexOrder&) = default;

 private:
  double u_;
  double v_;
};

}  // namespace fracstab
