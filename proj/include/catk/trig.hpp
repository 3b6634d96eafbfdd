#pragma once

#include "catk/curvature.hpp"

namespace catk {

struct TriangleSides {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Angle opposite side a.
double law_of_cosines_angle(const Curvature& k, const TriangleSides& sides,
                            double tol = kDefaultTolerance);

// Side opposite the angle alpha enclosed by sides b and cc.
double law_of_cosines_side(const Curvature& k, double b, double cc, double alpha);

// Distance from vertex C to the point M on side AB with AM = t*cc, where
// a = |BC|, b = |AC|, cc = |AB|.
double point_on_side_distance(const Curvature& k, double a, double b, double cc, double t);

// LHS - RHS of the identity relating the sides x=|AB|, y=|AC|, z=|BC| and
// the angles alpha at A and beta at B. For K=0 the identity reads
// z = x cos(beta) - y cos(alpha + beta).
double sper_ident_residual(const Curvature& k, double x, double y, double z, double alpha,
                           double beta);

}  // namespace catk
