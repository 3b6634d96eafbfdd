#include "catk/spaces.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catk/error.hpp"

namespace catk {

namespace {

constexpr double kPi = std::numbers::pi;

// Position of a point in a star-shaped graph: leg index (-1 for the centre)
// and distance from the centre.
struct StarPosition {
  std::string label;
  int leg = -1;
  double r = 0.0;
};

double star_distance(const StarPosition& p, const StarPosition& q) {
  return p.leg == q.leg ? std::abs(p.r - q.r) : p.r + q.r;
}

}  // namespace

SemimetricSpace t_graph(double arm, double bar, std::optional<double> p_offset, int subdivisions) {
  if (!(arm > 0.0 && bar > 0.0) || !std::isfinite(arm + bar))
    throw Error(ErrorKind::Usage, "arm and bar lengths must be positive");
  if (p_offset && !(*p_offset > 0.0 && *p_offset < arm))
    throw Error(ErrorKind::Usage, "P must lie strictly inside the arm");
  if (subdivisions < 0) throw Error(ErrorKind::Usage, "subdivision count must be nonnegative");

  const double half = 0.5 * bar;
  std::vector<StarPosition> pts{{"A", 0, arm}};
  if (p_offset) pts.push_back({"P", 0, arm - *p_offset});
  pts.push_back({"O", -1, 0.0});
  pts.push_back({"B", 1, half});
  pts.push_back({"Q", 2, half});
  const std::array<std::pair<const char*, double>, 3> legs{{{"a", arm}, {"b", half}, {"q", half}}};
  for (int leg = 0; leg < 3; ++leg) {
    for (int m = 1; m <= subdivisions; ++m) {
      const double r = legs[leg].second * m / (subdivisions + 1);
      pts.push_back({std::string(legs[leg].first) + std::to_string(m), leg, r});
    }
  }

  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::string> labels;
  for (Eigen::Index i = 0; i < n; ++i) {
    labels.push_back(pts[i].label);
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) m(i, j) = star_distance(pts[i], pts[j]);
  }
  return SemimetricSpace(std::move(labels), std::move(m));
}

SemimetricSpace four_point_space(const std::array<std::string, 4>& labels, const QuadDistances& q) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  auto set = [&](int i, int j, double v) { m(i, j) = m(j, i) = v; };
  set(kA, kP, q.x);
  set(kB, kQ, q.y);
  set(kA, kB, q.a);
  set(kP, kQ, q.b);
  set(kP, kB, q.d);
  set(kA, kQ, q.f);
  return SemimetricSpace({labels.begin(), labels.end()}, std::move(m));
}

SemimetricSpace symmetric_spherical_quad(const Curvature& c, double ab, double ap, double theta,
                                         double eps) {
  if (!c.positive()) throw Error(ErrorKind::Usage, "the symmetric quadrangle needs K > 0");
  const double bound = c.diameter_bound();
  if (!(ab > 0.0 && ab < bound && ap > 0.0 && ap < bound))
    throw Error(ErrorKind::Usage, "|AB| and |AP| must lie in (0, pi/kappa)");
  const ModelPoint A = ModelPoint::origin(c);
  const ModelPoint B = ModelPoint::from_polar(c, ab, 0.0);
  const ModelPoint P = ModelPoint::from_polar(c, ap, theta);
  const ModelPoint Q = geodesic_reflect(P, geodesic_midpoint(A, B));
  SemimetricSpace base = SemimetricSpace::from_points({"A", "P", "B", "Q"}, {A, P, B, Q});
  Eigen::MatrixXd m = base.dist();
  m(kP, kQ) += eps;
  m(kQ, kP) += eps;
  return SemimetricSpace(base.labels(), std::move(m));
}

std::array<ModelPoint, 4> levi_civita_trapezoid(const Curvature& c, const TrapezoidParams& p) {
  if (!(p.base > 0.0 && p.leg_a > 0.0 && p.leg_b > 0.0))
    throw Error(ErrorKind::Usage, "trapezoid lengths must be positive");
  const double bound = c.diameter_bound();
  if (p.base >= bound || p.leg_a >= bound || p.leg_b >= bound)
    throw Error(ErrorKind::Usage, "trapezoid lengths must be shorter than pi/kappa");
  const ModelPoint A = ModelPoint::origin(c);
  const ModelPoint B = ModelPoint::from_polar(c, p.base, 0.0);
  const ModelPoint P = ModelPoint::from_polar(c, p.leg_a, p.angle);
  const ModelPoint Pr = geodesic_reflect(P, geodesic_midpoint(A, B));
  // B -> P' is the reverse of the transported AP.
  const double t = (p.antiparallel ? 1.0 : -1.0) * p.leg_b / model_distance(B, Pr);
  return {A, P, B, geodesic_interpolate(B, Pr, t)};
}

std::array<ModelPoint, 4> parallelogramoid(const Curvature& c, double e, double f, double angle) {
  if (!(e > 0.0 && f > 0.0)) throw Error(ErrorKind::Usage, "diagonals must be positive");
  if (e >= c.diameter_bound() || f >= c.diameter_bound())
    throw Error(ErrorKind::Usage, "diagonals must be shorter than pi/kappa");
  return {ModelPoint::from_polar(c, 0.5 * e, 0.0), ModelPoint::from_polar(c, 0.5 * f, angle),
          ModelPoint::from_polar(c, 0.5 * e, kPi), ModelPoint::from_polar(c, 0.5 * f, angle + kPi)};
}

double printed_tolerance(int decimals) { return 0.5 * std::pow(10.0, -decimals); }

NumericExpectation printed_value(std::string what, std::string source, const std::string& text,
                                 std::function<double()> compute) {
  const auto dot = text.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
  return {std::move(what), std::move(source), text, std::stod(text), printed_tolerance(decimals),
          std::move(compute)};
}

}  // namespace catk
