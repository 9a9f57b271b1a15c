#pragma once

#include <stdexcept>
#include <string>

namespace fracstab {

/// Argument at a pole of Gamma (0, -1, -2, ...).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Value outside the domain of a function, e.g. 0^a with Re(a) <= 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid fractional order (Re alpha outside (0, 1]).
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kernel shorter than the requested convolution index.
class CapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach a decision (winding estimate did not
/// settle, eigen-iteration did not converge).
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnEquilibriumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fracstab
