#pragma once

#include "catk/curvature.hpp"

namespace catk::detail {

// h(t) with cos_k(t) = 1 - 2 h(t): sin^2(kappa t/2) for K>0 and
// -sinh^2(kappa t/2) for K<0.
inline double half_versine(const Curvature& c, double t) {
  const double s = c.sin_k(0.5 * t);
  return c.sign() * s * s;
}

// The quadrilateral cosine rewritten in half-versines. The constant terms of
// the two products cancel exactly, which keeps short configurations
// accurate. Written so that swapping (x, d) with (y, f) is bitwise neutral.
inline double cosq_from_half_versines(double sign, double hx, double hy, double ha, double hb,
                                      double hd, double hf, double sx, double sy) {
  const double first = (hd + hf) - (ha + hb);
  const double second = hx * hy + ha * hb + ha * (hx + hy) - (hx * hf + hy * hd) - hd * hf -
                        2.0 * ha * (hx * hy);
  return sign * 2.0 * (first + second) / ((1.0 - ha) * (sx * sy));
}

}  // namespace catk::detail
