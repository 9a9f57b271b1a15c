#pragma once

#include <cstddef>

#include "fracstab/complex.hpp"

namespace fracstab {

struct EigenOptions {
  double tolerance = 1e-12;
  std::size_t max_sweeps = 1000;
};

/// Eigenvalues of a square complex matrix. Closed form for n <= 2; otherwise
/// Householder reduction to Hessenberg form followed by single-shift QR with
/// Wilkinson shifts and deflation.
///
/// Throws DimensionError for non-square input and IndeterminateError when
/// the iteration does not converge within max_sweeps.
ComplexVector eigenvalues(const ComplexMatrix& a, const EigenOptions& options = {});

}  // namespace fracstab
