#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "catk/curvature.hpp"

namespace catk {

// A point of the model space of curvature K in its ambient embedding:
//   K>0  sphere of radius 1/kappa in R^3 or R^4
//   K=0  Cartesian coordinates
//   K<0  upper sheet of <p,p> = -1/kappa^2 in Minkowski space, time last
class ModelPoint {
 public:
  // Validates the embedding invariant to `tol` (relative to 1/kappa).
  ModelPoint(Eigen::VectorXd coords, Curvature c, double tol = kDefaultTolerance);

  const Eigen::VectorXd& coords() const noexcept { return coords_; }
  const Curvature& curvature() const noexcept { return curvature_; }
  // Intrinsic dimension (2 or 3).
  int dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }

  // Base point: north pole, origin, or hyperboloid vertex.
  static ModelPoint origin(const Curvature& c, int dim = 2);
  // Point at distance r from origin() in direction theta of the first two
  // tangent coordinates.
  static ModelPoint from_polar(const Curvature& c, double r, double theta, int dim = 2);

 private:
  Eigen::VectorXd coords_;
  Curvature curvature_;
};

// Re-projects ambient coordinates onto the model and wraps them.
ModelPoint project_to_model(Eigen::VectorXd coords, const Curvature& c);

// Minkowski form with time coordinate last.
double minkowski_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

double model_distance(const ModelPoint& p, const ModelPoint& q);

// Point at distance t*d(p,q) from p on the shortest p->q; t outside [0,1]
// extends the geodesic.
ModelPoint geodesic_interpolate(const ModelPoint& p, const ModelPoint& q, double t);

ModelPoint geodesic_midpoint(const ModelPoint& p, const ModelPoint& q);

// Point p' with o the midpoint of p p'.
ModelPoint geodesic_reflect(const ModelPoint& p, const ModelPoint& o);

// Geodesic from p with unit initial tangent `dir` (orthogonal to p in the
// ambient form), evaluated at arc length s.
ModelPoint exp_map(const ModelPoint& p, const Eigen::VectorXd& dir, double s);

// -cos of the angle at B between B->P' and B->Q, P' the reflection of P
// through the midpoint of AB.
double angle_and_transport_oracle(const ModelPoint& A, const ModelPoint& P,
                                  const ModelPoint& B, const ModelPoint& Q);

// n points drawn from a geodesic ball around a random centre. With a cap,
// every pairwise distance is at most diam_cap. Without one, K>0 samples the
// whole sphere and K<=0 uses a ball of radius 1.5/kappa (1.5 for K=0).
std::vector<ModelPoint> sample_model_points(const Curvature& c, int n, std::uint64_t seed,
                                            std::optional<double> diam_cap = std::nullopt,
                                            int dim = 3);

}  // namespace catk
