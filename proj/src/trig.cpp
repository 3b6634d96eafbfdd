#include "catk/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catk/error.hpp"

namespace catk {

namespace {

// Accepts a slightly negative product as rounding noise.
double clamp_nonnegative(double v, double tol, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -tol) return 0.0;
  throw Error(ErrorKind::InconsistentSides, what);
}

void require_sides(const Curvature& k, double a, double b, double c) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0) || !std::isfinite(a + b + c))
    throw Error(ErrorKind::Usage, "triangle sides must be finite and nonnegative");
  if (k.positive() && std::max({a, b, c}) >= k.diameter_bound())
    throw Error(ErrorKind::Usage, "triangle sides must be shorter than pi/kappa");
}

}  // namespace

double law_of_cosines_angle(const Curvature& k, const TriangleSides& s, double tol) {
  require_sides(k, s.a, s.b, s.c);
  if (!(s.b > 0.0 && s.c > 0.0))
    throw Error(ErrorKind::Usage, "the angle is undefined when an adjacent side vanishes");
  // Half-angle forms: sin^2(alpha/2) and cos^2(alpha/2) share the positive
  // denominator sin(b) sin(c), which cancels in atan2.
  const double u = s.a + s.b - s.c;
  const double v = s.a - s.b + s.c;
  const double w = s.b + s.c - s.a;
  const double p = s.a + s.b + s.c;
  double sin2 = 0.0;
  double cos2 = 0.0;
  double scale = 0.0;
  if (k.zero()) {
    sin2 = u * v;
    cos2 = p * w;
    scale = 4.0 * s.b * s.c;
  } else {
    sin2 = k.sin_k(0.5 * u) * k.sin_k(0.5 * v);
    cos2 = k.sin_k(0.5 * p) * k.sin_k(0.5 * w);
    scale = k.sin_k(s.b) * k.sin_k(s.c);
  }
  const char* msg = "side lengths violate the triangle inequality";
  sin2 = clamp_nonnegative(sin2, 0.5 * tol * scale, msg);
  cos2 = clamp_nonnegative(cos2, 0.5 * tol * scale, msg);
  if (sin2 == 0.0 && cos2 == 0.0) throw Error(ErrorKind::InconsistentSides, msg);
  return 2.0 * std::atan2(std::sqrt(sin2), std::sqrt(cos2));
}

double law_of_cosines_side(const Curvature& k, double b, double cc, double alpha) {
  require_sides(k, 0.0, b, cc);
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi))
    throw Error(ErrorKind::Usage, "angle must lie in [0, pi]");
  const double h = std::sin(0.5 * alpha);
  if (k.zero()) {
    const double d = b - cc;
    return std::sqrt(d * d + 4.0 * b * cc * h * h);
  }
  const double sd = k.sin_k(0.5 * (b - cc));
  const double half = sd * sd + k.sin_k(b) * k.sin_k(cc) * h * h;
  if (k.positive()) return 2.0 * std::asin(std::min(1.0, std::sqrt(half))) / k.kappa();
  return 2.0 * std::asinh(std::sqrt(half)) / k.kappa();
}

double point_on_side_distance(const Curvature& k, double a, double b, double cc, double t) {
  require_sides(k, a, b, cc);
  if (!(cc > 0.0)) throw Error(ErrorKind::Usage, "side AB must have positive length");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::Usage, "fraction must lie in [0, 1]");
  const double slack = kDefaultTolerance * std::max(1.0, a + b + cc);
  if (a > b + cc + slack || b > a + cc + slack || cc > a + b + slack)
    throw Error(ErrorKind::InconsistentSides, "side lengths violate the triangle inequality");
  if (k.zero()) {
    const double l2 = t * a * a + (1.0 - t) * b * b - t * (1.0 - t) * cc * cc;
    return std::sqrt(std::max(0.0, l2));
  }
  const double v = (k.cos_k(a) * k.sin_k(t * cc) + k.cos_k(b) * k.sin_k((1.0 - t) * cc)) /
                   k.sin_k(cc);
  if (k.positive()) return std::acos(std::clamp(v, -1.0, 1.0)) / k.kappa();
  return std::acosh(std::max(1.0, v)) / k.kappa();
}

double sper_ident_residual(const Curvature& k, double x, double y, double z, double alpha,
                           double beta) {
  if (k.zero()) return z - (x * std::cos(beta) - y * std::cos(alpha + beta));
  const double rhs = (k.cos_k(y) + k.cos_k(z)) / (1.0 + k.cos_k(x)) * k.sin_k(x) * std::cos(beta) -
                     k.sin_k(y) * std::cos(alpha + beta);
  return k.sin_k(z) - rhs;
}

}  // namespace catk
