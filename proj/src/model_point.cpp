#include "catk/model_point.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "catk/error.hpp"
#include "catk/trig.hpp"

namespace catk {

namespace {

using Eigen::VectorXd;

double time_part(const VectorXd& v) { return v[v.size() - 1]; }

// Ambient form: Euclidean for K>=0, Minkowski for K<0.
double ambient_dot(const Curvature& c, const VectorXd& u, const VectorXd& v) {
  return c.negative() ? minkowski_dot(u, v) : u.dot(v);
}

void require_same_model(const ModelPoint& p, const ModelPoint& q) {
  if (!(p.curvature() == q.curvature()))
    throw Error(ErrorKind::Usage, "points belong to model spaces of different curvature");
  if (p.coords().size() != q.coords().size())
    throw Error(ErrorKind::Usage, "points belong to model spaces of different dimension");
}

// Unit tangent at p pointing along v (v is projected onto the tangent space).
VectorXd unit_tangent(const ModelPoint& p, const VectorXd& v) {
  const Curvature& c = p.curvature();
  VectorXd u = v;
  if (c.positive()) {
    u -= (c.K() * p.coords().dot(v)) * p.coords();
  } else if (c.negative()) {
    u += (-c.K() * minkowski_dot(p.coords(), v)) * p.coords();
  }
  const double n2 = ambient_dot(c, u, u);
  if (!(n2 > 0.0)) throw Error(ErrorKind::Usage, "degenerate tangent direction");
  return u / std::sqrt(n2);
}

}  // namespace

double minkowski_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const auto n = u.size() - 1;
  return u.head(n).dot(v.head(n)) - u[n] * v[n];
}

ModelPoint::ModelPoint(Eigen::VectorXd coords, Curvature c, double tol)
    : coords_(std::move(coords)), curvature_(c) {
  if (coords_.size() != 3 && coords_.size() != 4)
    throw Error(ErrorKind::Data, "model points need 3 or 4 ambient coordinates");
  if (!coords_.allFinite()) throw Error(ErrorKind::Data, "non-finite coordinates");
  if (c.positive()) {
    if (std::abs(coords_.norm() * c.kappa() - 1.0) > tol)
      throw Error(ErrorKind::Data, "point is not on the sphere of radius 1/kappa");
  } else if (c.negative()) {
    const double scale = std::max(1.0, time_part(coords_) * time_part(coords_) * -c.K());
    if (time_part(coords_) <= 0.0 ||
        std::abs(minkowski_dot(coords_, coords_) * -c.K() + 1.0) > tol * scale)
      throw Error(ErrorKind::Data, "point is not on the upper hyperboloid");
  }
}

ModelPoint project_to_model(Eigen::VectorXd v, const Curvature& c) {
  if (c.positive()) {
    const double n = v.norm();
    if (!(n > 0.0)) throw Error(ErrorKind::Data, "cannot project the zero vector to the sphere");
    v /= n * c.kappa();
  } else if (c.negative()) {
    const auto n = v.size() - 1;
    v[n] = std::sqrt(1.0 / -c.K() + v.head(n).squaredNorm());
  }
  return ModelPoint(std::move(v), c);
}

ModelPoint ModelPoint::origin(const Curvature& c, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorKind::Usage, "dimension must be 2 or 3");
  VectorXd v = VectorXd::Zero(dim + 1);
  if (!c.zero()) v[dim] = 1.0 / c.kappa();
  return ModelPoint(std::move(v), c);
}

ModelPoint ModelPoint::from_polar(const Curvature& c, double r, double theta, int dim) {
  const ModelPoint o = origin(c, dim);
  VectorXd dir = VectorXd::Zero(dim + 1);
  dir[0] = std::cos(theta);
  dir[1] = std::sin(theta);
  return exp_map(o, dir, r);
}

double model_distance(const ModelPoint& p, const ModelPoint& q) {
  require_same_model(p, q);
  const Curvature& c = p.curvature();
  const VectorXd diff = p.coords() - q.coords();
  if (c.positive()) {
    const double sum = (p.coords() + q.coords()).norm();
    return 2.0 * std::atan2(diff.norm(), sum) / c.kappa();
  }
  if (c.negative()) {
    const double chord = std::sqrt(std::max(0.0, minkowski_dot(diff, diff)));
    return 2.0 * std::asinh(0.5 * c.kappa() * chord) / c.kappa();
  }
  return diff.norm();
}

ModelPoint exp_map(const ModelPoint& p, const Eigen::VectorXd& dir, double s) {
  const Curvature& c = p.curvature();
  if (dir.size() != p.coords().size())
    throw Error(ErrorKind::Usage, "tangent direction has the wrong dimension");
  if (c.zero()) {
    const double n = dir.norm();
    if (!(n > 0.0)) throw Error(ErrorKind::Usage, "degenerate tangent direction");
    return ModelPoint(p.coords() + (s / n) * dir, c);
  }
  const VectorXd u = unit_tangent(p, dir);
  const double ks = c.kappa() * s;
  VectorXd v = c.positive() ? VectorXd(std::cos(ks) * p.coords() + (std::sin(ks) / c.kappa()) * u)
                            : VectorXd(std::cosh(ks) * p.coords() + (std::sinh(ks) / c.kappa()) * u);
  return project_to_model(std::move(v), c);
}

ModelPoint geodesic_interpolate(const ModelPoint& p, const ModelPoint& q, double t) {
  require_same_model(p, q);
  const Curvature& c = p.curvature();
  if (c.zero()) return ModelPoint(p.coords() + t * (q.coords() - p.coords()), c);
  const double d = model_distance(p, q);
  if (d == 0.0) return p;
  if (c.positive() && (p.coords() + q.coords()).norm() * c.kappa() <= 1e-12)
    throw Error(ErrorKind::NoUniqueGeodesic, "antipodal points have no unique shortest");
  return exp_map(p, q.coords() - p.coords(), t * d);
}

ModelPoint geodesic_midpoint(const ModelPoint& p, const ModelPoint& q) {
  return geodesic_interpolate(p, q, 0.5);
}

ModelPoint geodesic_reflect(const ModelPoint& p, const ModelPoint& o) {
  require_same_model(p, o);
  const Curvature& c = p.curvature();
  if (c.positive() && model_distance(p, o) >= 0.5 * std::numbers::pi / c.kappa())
    throw Error(ErrorKind::ReflectionUndefined,
                "reflection needs the point within pi/(2 kappa) of the centre");
  return geodesic_interpolate(o, p, -1.0);
}

double angle_and_transport_oracle(const ModelPoint& A, const ModelPoint& P, const ModelPoint& B,
                                  const ModelPoint& Q) {
  const ModelPoint O = geodesic_midpoint(A, B);
  const ModelPoint Pr = geodesic_reflect(P, O);
  TriangleSides sides{model_distance(Pr, Q), model_distance(B, Pr), model_distance(B, Q)};
  return -std::cos(law_of_cosines_angle(B.curvature(), sides));
}

std::vector<ModelPoint> sample_model_points(const Curvature& c, int n, std::uint64_t seed,
                                            std::optional<double> diam_cap, int dim) {
  if (n < 1) throw Error(ErrorKind::Usage, "sample size must be positive");
  if (dim != 2 && dim != 3) throw Error(ErrorKind::Usage, "dimension must be 2 or 3");
  if (diam_cap) {
    if (!(*diam_cap > 0.0) || !std::isfinite(*diam_cap))
      throw Error(ErrorKind::Usage, "diameter cap must be positive and finite");
    if (c.positive() && *diam_cap > 0.5 * std::numbers::pi / c.kappa() * (1.0 + 1e-12))
      throw Error(ErrorKind::Usage, "diameter cap exceeds pi/(2 kappa)");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto gaussian = [&] {
    VectorXd v(dim + 1);
    for (int i = 0; i <= dim; ++i) v[i] = normal(rng);
    return v;
  };
  // exp_map projects onto the tangent space; the flat model keeps the last
  // coordinate at zero.
  auto direction = [&] {
    VectorXd v = gaussian();
    if (c.zero()) v[dim] = 0.0;
    return v;
  };
  auto ball_point = [&](const ModelPoint& centre, double radius) {
    const double r = radius * std::pow(unit(rng), 1.0 / dim);
    return exp_map(centre, direction(), r);
  };

  const double unit_len = c.zero() ? 1.0 : 1.0 / c.kappa();
  const ModelPoint o = ModelPoint::origin(c, dim);
  std::vector<ModelPoint> out;
  out.reserve(n);
  if (c.positive() && !diam_cap) {
    for (int i = 0; i < n; ++i) out.push_back(project_to_model(gaussian(), c));
    return out;
  }
  const ModelPoint centre =
      c.positive() ? project_to_model(gaussian(), c) : ball_point(o, unit_len);
  const double radius = diam_cap ? 0.5 * *diam_cap : 1.5 * unit_len;
  for (int i = 0; i < n; ++i) out.push_back(ball_point(centre, radius));
  return out;
}

}  // namespace catk
