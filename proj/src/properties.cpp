#include "catk/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/LU>

#include "catk/conditions.hpp"
#include "catk/cosq.hpp"
#include "catk/error.hpp"
#include "catk/semimetric.hpp"

namespace catk {

namespace {

Eigen::Matrix4d distance_matrix(const std::array<ModelPoint, 4>& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m(i, j) = m(j, i) = model_distance(p[i], p[j]);
  return m;
}

std::array<ModelPoint, 4> random_quadruple(const Curvature& c, std::uint64_t seed, int dim,
                                           std::optional<double> cap) {
  const auto v = sample_model_points(c, 4, seed, cap, dim);
  return {v[0], v[1], v[2], v[3]};
}

double orientation(const ModelPoint& p, const ModelPoint& q, const ModelPoint& r) {
  Eigen::Matrix3d m;
  m.col(0) = p.coords();
  m.col(1) = q.coords();
  m.col(2) = r.coords();
  return m.determinant();
}

}  // namespace

const char* to_string(PropertyCheck c) noexcept {
  switch (c) {
    case PropertyCheck::Bound: return "bound";
    case PropertyCheck::Halving: return "halving";
    case PropertyCheck::EulerEquality: return "euler-eq";
    case PropertyCheck::Transport: return "transport";
  }
  return "unknown";
}

PropertyCheck parse_property_check(const std::string& name) {
  if (name == "bound") return PropertyCheck::Bound;
  if (name == "halving") return PropertyCheck::Halving;
  if (name == "euler-eq") return PropertyCheck::EulerEquality;
  if (name == "transport") return PropertyCheck::Transport;
  throw Error(ErrorKind::Usage, "unknown check '" + name + "'");
}

std::optional<double> default_diam_cap(const Curvature& c) {
  if (c.positive()) return 0.5 * std::numbers::pi / c.kappa();
  return std::nullopt;
}

std::array<ModelPoint, 4> random_convex_quadrangle(const Curvature& c, std::uint64_t seed,
                                                   double max_radius) {
  if (c.zero()) throw Error(ErrorKind::Usage, "convex quadrangles are drawn for K != 0 only");
  if (c.positive() && max_radius >= 0.5 * std::numbers::pi / c.kappa())
    throw Error(ErrorKind::Usage, "quadrangle must stay inside an open hemisphere");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Vertices in the upper half of the embedding; the sign of det(p, q, r)
  // then gives the orientation of the triangle pqr.
  for (;;) {
    std::array<double, 4> theta;
    for (auto& t : theta) t = 2.0 * std::numbers::pi * unit(rng);
    std::sort(theta.begin(), theta.end());
    std::array<ModelPoint, 4> q{ModelPoint::origin(c), ModelPoint::origin(c),
                                ModelPoint::origin(c), ModelPoint::origin(c)};
    for (int i = 0; i < 4; ++i)
      q[i] = ModelPoint::from_polar(c, max_radius * (0.2 + 0.8 * unit(rng)), theta[i]);
    bool convex = true;
    for (int i = 0; i < 4 && convex; ++i)
      convex = orientation(q[i], q[(i + 1) % 4], q[(i + 2) % 4]) > 1e-6 * std::pow(max_radius, 2);
    if (convex) return q;
  }
}

TrialResult run_property_trial(const Curvature& c, PropertyCheck check, std::uint64_t seed,
                               int dim, std::optional<double> diam_cap) {
  switch (check) {
    case PropertyCheck::Bound: {
      const auto p = random_quadruple(c, seed, dim, diam_cap ? diam_cap : default_diam_cap(c));
      const CaseTable t = twelve_cases(c, distance_matrix(p));
      double worst = 0.0;
      for (const auto& v : t.values)
        if (v) worst = std::max(worst, std::abs(*v) - 1.0);
      return {worst, false};
    }
    case PropertyCheck::Halving: {
      if (!c.positive()) throw Error(ErrorKind::Usage, "the halving check needs K > 0");
      const auto p = random_quadruple(c, seed, dim, diam_cap ? diam_cap : default_diam_cap(c));
      const auto [m1, m2] = halve_in_model(p[0], p[1], p[2], p[3]);
      const double before = cosq_k(c, extract_quad(distance_matrix(p), kA, kP, kB, kQ));
      const double after =
          cosq_k(c, extract_quad(distance_matrix({p[0], m1, p[2], m2}), kA, kP, kB, kQ));
      return {std::abs(before - after), false};
    }
    case PropertyCheck::EulerEquality: {
      if (c.zero()) throw Error(ErrorKind::Usage, "the quadrangle equality needs K != 0");
      const double radius = diam_cap ? 0.5 * *diam_cap
                                     : (c.positive() ? 0.25 * std::numbers::pi : 1.5) / c.kappa();
      const auto q = random_convex_quadrangle(c, seed, radius);
      const ModelPoint o1 = geodesic_midpoint(q[1], q[3]);
      const ModelPoint o2 = geodesic_midpoint(q[0], q[2]);
      const auto [lhs, rhs] = k_euler_equality_sides(
          c, model_distance(q[0], q[1]), model_distance(q[1], q[2]), model_distance(q[2], q[3]),
          model_distance(q[3], q[0]), model_distance(q[1], q[3]), model_distance(q[0], q[2]),
          model_distance(o1, o2));
      return {std::abs(lhs - rhs), false};
    }
    case PropertyCheck::Transport: {
      const auto p = random_quadruple(c, seed, dim, diam_cap ? diam_cap : default_diam_cap(c));
      if (c.positive() &&
          model_distance(p[1], geodesic_midpoint(p[0], p[2])) >= 0.5 * std::numbers::pi / c.kappa())
        return {0.0, true};
      const double direct = cosq_k(c, extract_quad(distance_matrix(p), kA, kP, kB, kQ));
      return {std::abs(direct - angle_and_transport_oracle(p[0], p[1], p[2], p[3])), false};
    }
  }
  throw Error(ErrorKind::Usage, "unknown check");
}

PropertyRun run_property(const Curvature& c, PropertyCheck check, int n, std::uint64_t seed,
                         double tolerance, int dim, std::optional<double> diam_cap) {
  if (n < 1) throw Error(ErrorKind::Usage, "trial count must be positive");
  PropertyRun run;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const TrialResult r = run_property_trial(c, check, s, dim, diam_cap);
    ++run.trials;
    if (r.skipped) {
      ++run.skipped;
      continue;
    }
    run.max_residual = std::max(run.max_residual, r.residual);
    if (!(r.residual <= tolerance)) {
      ++run.failures;
      if (!run.first_failure_seed) run.first_failure_seed = s;
    }
  }
  return run;
}

}  // namespace catk
