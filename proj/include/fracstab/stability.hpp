#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fracstab/complex.hpp"
#include "fracstab/linalg.hpp"
#include "fracstab/order.hpp"

namespace fracstab {

// Characteristic equation of the linear system with eigenvalue lambda:
//
//     z (1 - 1/z)^alpha = lambda - 1.
//
// Its image of the unit circle z = e^{it} is the boundary curve
//
//     gamma(t) = 2^alpha sin(t/2)^alpha exp(i[alpha pi/2 + t(1 - alpha/2)]) + 1,
//
// which starts and ends at lambda = 1. For v != 0 both ends spiral into 1.

struct CurveSample {
  double t;
  Complex point;
};

struct BoundaryOptions {
  std::size_t n_samples = 4096;   // uniform samples over [0, 2pi]
  std::size_t refine_levels = 40;  // octaves of geometric refinement per end
  std::size_t samples_per_level = 16;
};

struct BoundaryCurve {
  ComplexOrder order;
  std::vector<CurveSample> samples;  // t ascending, first and last equal 1
  bool is_simple = true;
};

enum class Status { Stable, Unstable, Boundary };

std::string_view to_string(Status status);

struct WindingEvidence {
  int winding;
};
struct RootCountEvidence {
  int outside;
};
struct NonSimpleCurveEvidence {};
/// lambda closer to the sampled curve than the boundary tolerance.
struct OnCurveEvidence {
  double distance;
};

using Evidence = std::variant<WindingEvidence, RootCountEvidence, NonSimpleCurveEvidence, OnCurveEvidence>;

struct StabilityVerdict {
  Status status;
  Evidence evidence;
  double tolerance_used;
};

/// gamma(t) evaluated directly; t outside (0, 2pi) maps to the endpoint 1.
Complex boundary_point(const ComplexOrder& order, double t);

/// Uniform grid plus log-uniform refinement toward t = 0 and t = 2pi.
/// Throws std::invalid_argument when n_samples < 64.
BoundaryCurve boundary_curve(const ComplexOrder& order, const BoundaryOptions& options = {});
BoundaryCurve boundary_curve(const ComplexOrder& order, std::size_t n_samples);

/// Closed-form simplicity criterion 0 <= v < sqrt(2u - u^2). For v < 0 the
/// decision is numerical: the default-sampled curve must be free of
/// self-intersections and positively oriented.
bool is_simple_order(const ComplexOrder& order);

/// First crossing pair (t1, t2) of non-adjacent polyline segments, refined by
/// bisection on the true curve. Requires at least 512 samples.
std::optional<std::pair<double, double>> detect_self_intersection(const BoundaryCurve& curve);

/// Twice the signed area enclosed by the closed polyline (positive for
/// counter-clockwise traversal).
double signed_area(const BoundaryCurve& curve);

/// Winding number of the closed polyline around lambda.
int winding_number(const BoundaryCurve& curve, Complex lambda);

/// Euclidean distance from lambda to the polyline.
double distance_to_curve(const BoundaryCurve& curve, Complex lambda);

/// 1e-6 (1 + |lambda|).
double boundary_tolerance(Complex lambda);

StabilityVerdict classify_lambda(const ComplexOrder& order, Complex lambda);
StabilityVerdict classify_lambda(const BoundaryCurve& curve, Complex lambda);

/// Number of zeros of z (1 - 1/z)^alpha - (lambda - 1) in |z| > radius, by the
/// argument principle (outer circle minus inner circle). radius must be in
/// (1, 1.1]. Throws IndeterminateError if the winding estimate does not
/// settle on an integer.
int count_roots_outside(const ComplexOrder& order, Complex lambda, double radius);

struct EigenVerdict {
  Complex eigenvalue;
  StabilityVerdict verdict;
};

struct MatrixVerdict {
  StabilityVerdict overall;
  std::vector<EigenVerdict> per_eigenvalue;
};

/// Stable iff every eigenvalue is Stable; Unstable if any is Unstable.
/// Throws DimensionError when a is not square or larger than max_dimension.
MatrixVerdict classify_matrix_detailed(const ComplexOrder& order, const ComplexMatrix& a,
                                       std::size_t max_dimension = 16);
StabilityVerdict classify_matrix(const ComplexOrder& order, const ComplexMatrix& a,
                                 std::size_t max_dimension = 16);

struct Interval {
  double lo;
  double hi;
};

/// Open stable region intersected with the real axis. Empty when the order is
/// not simple.
std::vector<Interval> real_axis_intervals(const ComplexOrder& order);
std::vector<Interval> real_axis_intervals(const BoundaryCurve& curve);

}  // namespace fracstab
