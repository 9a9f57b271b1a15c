#include "fracstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fracstab/errors.hpp"
#include "fracstab/special_functions.hpp"

namespace fracstab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// 2 pi = kTwoPi + kTwoPiLow to ~32 digits; keeps 2pi - t accurate near 2pi.
constexpr double kTwoPiLow = 2.4492935982947064e-16;
constexpr double kRefineRatio = 0.5;

// gamma at parameter t given sin(t/2) computed by the caller.
Complex curve_point(const ComplexOrder& order, double sin_half, double t) {
  if (!(sin_half > 0.0)) return {1.0, 0.0};
  const Complex alpha = order.value();
  const Complex modulus = cpow_principal(Complex(2.0 * sin_half, 0.0), alpha);
  const Complex phase = std::exp(Complex(0.0, 1.0) * (alpha * (kPi / 2.0) + t * (1.0 - alpha / 2.0)));
  return modulus * phase + 1.0;
}

double sin_half_angle(double t) {
  if (t <= kPi) return std::sin(0.5 * t);
  return std::sin(0.5 * ((kTwoPi - t) + kTwoPiLow));
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double orient(Complex a, Complex b, Complex c) { return cross(b - a, c - a); }

bool segments_cross(Complex a, Complex b, Complex c, Complex d) {
  const double d1 = orient(a, b, c);
  const double d2 = orient(a, b, d);
  const double d3 = orient(c, d, a);
  const double d4 = orient(c, d, b);
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double s = std::clamp((std::real(std::conj(ab) * (p - a))) / len2, 0.0, 1.0);
  return std::abs(p - (a + s * ab));
}

bool formula_simple(const ComplexOrder& order) {
  const double u = order.u();
  const double v = order.v();
  return v >= 0.0 && v < std::sqrt(std::max(0.0, 2.0 * u - u * u));
}

bool numerically_simple(const BoundaryCurve& curve) {
  return !detect_self_intersection(curve).has_value() && signed_area(curve) > 0.0;
}

// Winding of the closed sequence `values` (last joined to first) around 0.
double winding_of(std::span<const Complex> values) {
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Complex a = values[k];
    const Complex b = values[(k + 1) % values.size()];
    total += std::arg(b / a);
  }
  return total / kTwoPi;
}

StabilityVerdict make_verdict(Status status, Evidence evidence, double tol) { return {status, evidence, tol}; }

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Stable:
      return "stable";
    case Status::Unstable:
      return "unstable";
    case Status::Boundary:
      return "boundary";
  }
  return "unknown";
}

Complex boundary_point(const ComplexOrder& order, double t) {
  if (!(t > 0.0 && t < kTwoPi)) return {1.0, 0.0};
  return curve_point(order, sin_half_angle(t), t);
}

BoundaryCurve boundary_curve(const ComplexOrder& order, const BoundaryOptions& options) {
  if (options.n_samples < 64) throw std::invalid_argument("boundary_curve: n_samples must be >= 64");
  const std::size_t n = options.n_samples;
  const double h = kTwoPi / static_cast<double>(n);
  const std::size_t per = std::max<std::size_t>(1, options.samples_per_level);
  const std::size_t fine = options.refine_levels * per;

  BoundaryCurve curve{order, {}, true};
  auto& out = curve.samples;
  out.reserve(n + 1 + 2 * fine);

  out.push_back({0.0, {1.0, 0.0}});
  for (std::size_t j = fine; j >= 1; --j) {
    const double t = h * std::pow(kRefineRatio, static_cast<double>(j) / static_cast<double>(per));
    out.push_back({t, curve_point(order, std::sin(0.5 * t), t)});
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double t = h * static_cast<double>(k);
    out.push_back({t, boundary_point(order, t)});
  }
  for (std::size_t j = 1; j <= fine; ++j) {
    const double s = h * std::pow(kRefineRatio, static_cast<double>(j) / static_cast<double>(per));
    const double t = kTwoPi - s;
    out.push_back({t, curve_point(order, std::sin(0.5 * s), t)});
  }
  out.push_back({kTwoPi, {1.0, 0.0}});

  curve.is_simple = order.v() >= 0.0 ? formula_simple(order) : numerically_simple(curve);
  return curve;
}

BoundaryCurve boundary_curve(const ComplexOrder& order, std::size_t n_samples) {
  BoundaryOptions options;
  options.n_samples = n_samples;
  return boundary_curve(order, options);
}

bool is_simple_order(const ComplexOrder& order) {
  if (order.v() >= 0.0) return formula_simple(order);
  return boundary_curve(order).is_simple;
}

std::optional<std::pair<double, double>> detect_self_intersection(const BoundaryCurve& curve) {
  const auto& pts = curve.samples;
  if (pts.size() < 512) throw std::invalid_argument("detect_self_intersection: need at least 512 samples");

  // Open polyline between the innermost refinement samples; the closing
  // chords into lambda = 1 are below sampling resolution.
  struct Segment {
    std::size_t index;
    double xmin, xmax, ymin, ymax;
  };
  std::vector<Segment> segments;
  segments.reserve(pts.size());
  for (std::size_t i = 1; i + 2 < pts.size(); ++i) {
    const Complex a = pts[i].point;
    const Complex b = pts[i + 1].point;
    if (a == b) continue;
    segments.push_back({i, std::min(a.real(), b.real()), std::max(a.real(), b.real()), std::min(a.imag(), b.imag()),
                        std::max(a.imag(), b.imag())});
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& l, const Segment& r) { return l.xmin < r.xmin; });

  std::vector<const Segment*> active;
  for (const Segment& s : segments) {
    std::erase_if(active, [&](const Segment* a) { return a->xmax < s.xmin; });
    for (const Segment* a : active) {
      const std::size_t i = std::min(a->index, s.index);
      const std::size_t j = std::max(a->index, s.index);
      if (j - i < 2) continue;
      if (a->ymax < s.ymin || s.ymax < a->ymin) continue;
      if (!segments_cross(pts[i].point, pts[i + 1].point, pts[j].point, pts[j + 1].point)) continue;

      // Bisect both parameter intervals on the true curve while the chords
      // keep crossing.
      double a1 = pts[i].t, b1 = pts[i + 1].t, a2 = pts[j].t, b2 = pts[j + 1].t;
      const ComplexOrder& order = curve.order;
      for (int iter = 0; iter < 48; ++iter) {
        const double m1 = 0.5 * (a1 + b1);
        const double m2 = 0.5 * (a2 + b2);
        const double first[2][2] = {{a1, m1}, {m1, b1}};
        const double second[2][2] = {{a2, m2}, {m2, b2}};
        bool found = false;
        for (const auto& p : first) {
          for (const auto& q : second) {
            if (segments_cross(boundary_point(order, p[0]), boundary_point(order, p[1]), boundary_point(order, q[0]),
                               boundary_point(order, q[1]))) {
              a1 = p[0], b1 = p[1], a2 = q[0], b2 = q[1];
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) break;
      }
      return std::make_pair(0.5 * (a1 + b1), 0.5 * (a2 + b2));
    }
    active.push_back(&s);
  }
  return std::nullopt;
}

double signed_area(const BoundaryCurve& curve) {
  const auto& pts = curve.samples;
  double area2 = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Complex a = pts[k].point - 1.0;
    const Complex b = pts[(k + 1) % pts.size()].point - 1.0;
    area2 += cross(a, b);
  }
  return area2;
}

int winding_number(const BoundaryCurve& curve, Complex lambda) {
  std::vector<Complex> rel;
  rel.reserve(curve.samples.size());
  for (const auto& s : curve.samples) rel.push_back(s.point - lambda);
  const double w = winding_of(rel);
  const double rounded = std::round(w);
  if (std::abs(w - rounded) > 0.25 || !std::isfinite(w)) {
    throw IndeterminateError("winding_number: estimate " + format_real(w) + " is not near an integer");
  }
  return static_cast<int>(rounded);
}

double distance_to_curve(const BoundaryCurve& curve, Complex lambda) {
  const auto& pts = curve.samples;
  double best = std::abs(pts.front().point - lambda);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    best = std::min(best, point_segment_distance(lambda, pts[k].point, pts[k + 1].point));
  }
  return best;
}

double boundary_tolerance(Complex lambda) { return 1e-6 * (1.0 + std::abs(lambda)); }

StabilityVerdict classify_lambda(const BoundaryCurve& curve, Complex lambda) {
  const double tol = boundary_tolerance(lambda);
  if (!curve.is_simple) return make_verdict(Status::Unstable, NonSimpleCurveEvidence{}, tol);
  const double d = distance_to_curve(curve, lambda);
  if (d < tol) return make_verdict(Status::Boundary, OnCurveEvidence{d}, tol);
  const int w = winding_number(curve, lambda);
  // Roots of the characteristic equation outside the unit circle = 1 - w.
  return make_verdict(w == 1 ? Status::Stable : Status::Unstable, WindingEvidence{w}, tol);
}

StabilityVerdict classify_lambda(const ComplexOrder& order, Complex lambda) {
  return classify_lambda(boundary_curve(order), lambda);
}

namespace {

// g(z) = z (1 - 1/z)^alpha - c on z = rho e^{i theta}.
Complex characteristic(const ComplexOrder& order, Complex c, double rho, double theta) {
  const double sin_half = std::sin(0.5 * theta);
  const Complex z = std::polar(rho, theta);
  const Complex z_minus_1((rho - 1.0) * std::cos(theta) - 2.0 * sin_half * sin_half, rho * std::sin(theta));
  return z * cpow_principal(z_minus_1 / z, order.value()) - c;
}

// Angles in (-pi, pi]: n uniform samples plus geometric refinement toward
// theta = 0 down to `finest`.
std::vector<double> contour_angles(std::size_t n, double finest) {
  std::vector<double> angles;
  angles.reserve(n + 256);
  const double step = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) angles.push_back(-kPi + step * static_cast<double>(k + 1));
  if (finest > 0.0) {
    for (double a = step * std::pow(2.0, -0.25); a > finest; a *= std::pow(2.0, -0.25)) {
      angles.push_back(a);
      angles.push_back(-a);
    }
    angles.push_back(0.0);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return angles;
}

// Winding of g around 0 along |z| = rho, doubling the sample count until two
// consecutive estimates round to the same integer within 0.25.
int contour_winding(const ComplexOrder& order, Complex c, double rho, double finest) {
  std::optional<long> previous;
  for (std::size_t n = 1024; n <= (std::size_t{1} << 21); n *= 2) {
    const auto angles = contour_angles(n, finest);
    std::vector<Complex> values;
    values.reserve(angles.size());
    for (const double th : angles) values.push_back(characteristic(order, c, rho, th));
    const double w = winding_of(values);
    const double rounded = std::round(w);
    if (std::isfinite(w) && std::abs(w - rounded) <= 0.25) {
      const long current = std::lround(rounded);
      if (previous && *previous == current) return static_cast<int>(current);
      previous = current;
    } else {
      previous.reset();
    }
  }
  throw IndeterminateError("count_roots_outside: winding along |z| = " + format_real(rho) + " did not settle");
}

}  // namespace

int count_roots_outside(const ComplexOrder& order, Complex lambda, double radius) {
  const double delta = radius - 1.0;
  if (!(delta > 0.0 && delta <= 0.1)) throw std::invalid_argument("count_roots_outside: radius must be in (1, 1.1]");
  const Complex c = lambda - 1.0;

  const double exponent = order.u() < 1.0 ? 1.0 / (1.0 - order.u()) : 64.0;
  double big = 10.0 * std::pow(1.0 + std::abs(c), std::min(exponent, 64.0));
  big = std::min(big, 1e100);
  int outer = 0;
  for (int attempt = 0; attempt < 64; ++attempt, big *= 2.0) {
    outer = contour_winding(order, c, big, 0.0);
    if (outer == 1) break;
  }
  if (outer != 1) throw IndeterminateError("count_roots_outside: outer winding never reached 1");

  const int inner = contour_winding(order, c, radius, delta / 16.0);
  const int outside = outer - inner;
  if (outside < 0) throw IndeterminateError("count_roots_outside: negative root count");
  return outside;
}

MatrixVerdict classify_matrix_detailed(const ComplexOrder& order, const ComplexMatrix& a, std::size_t max_dimension) {
  if (!a.square()) throw DimensionError("classify_matrix: matrix is not square");
  if (a.rows() == 0) throw DimensionError("classify_matrix: empty matrix");
  if (a.rows() > max_dimension) {
    throw DimensionError("classify_matrix: dimension " + std::to_string(a.rows()) + " exceeds " +
                         std::to_string(max_dimension));
  }
  const ComplexVector eig = eigenvalues(a);
  const BoundaryCurve curve = boundary_curve(order);

  MatrixVerdict result{{Status::Stable, WindingEvidence{1}, 0.0}, {}};
  const EigenVerdict* unstable = nullptr;
  const EigenVerdict* boundary = nullptr;
  for (const Complex lambda : eig) result.per_eigenvalue.push_back({lambda, classify_lambda(curve, lambda)});
  double tol = 0.0;
  for (const auto& ev : result.per_eigenvalue) {
    tol = std::max(tol, ev.verdict.tolerance_used);
    if (ev.verdict.status == Status::Unstable && unstable == nullptr) unstable = &ev;
    if (ev.verdict.status == Status::Boundary && boundary == nullptr) boundary = &ev;
  }
  const EigenVerdict* decisive = unstable != nullptr ? unstable : boundary != nullptr ? boundary : &result.per_eigenvalue.front();
  result.overall = {decisive->verdict.status, decisive->verdict.evidence, tol};
  return result;
}

StabilityVerdict classify_matrix(const ComplexOrder& order, const ComplexMatrix& a, std::size_t max_dimension) {
  return classify_matrix_detailed(order, a, max_dimension).overall;
}

std::vector<Interval> real_axis_intervals(const BoundaryCurve& curve) {
  if (!curve.is_simple) return {};
  const auto& pts = curve.samples;
  const ComplexOrder& order = curve.order;

  std::vector<double> crossings;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double y0 = pts[k].point.imag();
    if (y0 == 0.0) {
      crossings.push_back(pts[k].point.real());
      continue;
    }
    if (k + 1 == pts.size()) break;
    const double y1 = pts[k + 1].point.imag();
    if (y1 == 0.0 || (y0 > 0.0) == (y1 > 0.0)) continue;

    double lo = pts[k].t, hi = pts[k + 1].t;
    Complex plo = pts[k].point, phi = pts[k + 1].point;
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      const Complex pm = boundary_point(order, mid);
      if (pm.imag() == 0.0) {
        plo = phi = pm;
        break;
      }
      if ((pm.imag() > 0.0) == (plo.imag() > 0.0)) {
        lo = mid;
        plo = pm;
      } else {
        hi = mid;
        phi = pm;
      }
    }
    const double dy = plo.imag() - phi.imag();
    const double f = dy == 0.0 ? 0.0 : plo.imag() / dy;
    crossings.push_back(plo.real() + f * (phi.real() - plo.real()));
  }

  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end(), [](double a, double b) { return b - a <= 1e-12; }),
                  crossings.end());

  std::vector<Interval> out;
  for (std::size_t k = 0; k + 1 < crossings.size(); ++k) {
    const double lo = crossings[k];
    const double hi = crossings[k + 1];
    if (classify_lambda(curve, Complex(0.5 * (lo + hi), 0.0)).status != Status::Stable) continue;
    if (!out.empty() && out.back().hi == lo) {
      out.back().hi = hi;
    } else {
      out.push_back({lo, hi});
    }
  }
  return out;
}

std::vector<Interval> real_axis_intervals(const ComplexOrder& order) { return real_axis_intervals(boundary_curve(order)); }

}  // namespace fracstab
