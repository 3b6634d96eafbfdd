#include "catk/cosq.hpp"

#include <cmath>

#include "catk/error.hpp"
#include "cosq_kernel.hpp"

namespace catk {

QuadDistances extract_quad(const Eigen::MatrixXd& m, int t1, int h1, int t2, int h2) {
  return {m(t1, h1), m(t2, h2), m(t1, t2), m(h1, h2), m(h1, t2), m(t1, h2)};
}

bool cosq_admissible(const Curvature& c, const QuadDistances& q) noexcept {
  if (!c.positive()) return true;
  const double bound = c.diameter_bound();
  return q.x < bound && q.y < bound && q.a < bound;
}

double cosq_k(const Curvature& c, const QuadDistances& q) {
  if (!(q.x > 0.0 && q.y > 0.0))
    throw Error(ErrorKind::UndefinedCosq, "bound vectors must be non-zero");
  if (!(q.a >= 0.0 && q.b >= 0.0 && q.d >= 0.0 && q.f >= 0.0))
    throw Error(ErrorKind::UndefinedCosq, "distances must be nonnegative");
  if (!cosq_admissible(c, q))
    throw Error(ErrorKind::UndefinedCosq, "|AP|, |BQ| and |AB| must be shorter than pi/kappa");
  if (c.zero()) {
    return (q.f * q.f + q.d * q.d - q.a * q.a - q.b * q.b) / (2.0 * q.x * q.y);
  }
  using detail::half_versine;
  return detail::cosq_from_half_versines(c.sign(), half_versine(c, q.x), half_versine(c, q.y),
                                         half_versine(c, q.a), half_versine(c, q.b),
                                         half_versine(c, q.d), half_versine(c, q.f),
                                         c.sin_k(q.x), c.sin_k(q.y));
}

std::optional<int> case_index(int t1, int h1, int t2, int h2) noexcept {
  const std::array<int, 4> fwd{t1, h1, t2, h2};
  const std::array<int, 4> rev{t2, h2, t1, h1};
  for (int i = 0; i < static_cast<int>(kCases.size()); ++i) {
    if (kCases[i].roles == fwd || kCases[i].roles == rev) return i;
  }
  return std::nullopt;
}

CaseTable twelve_cases(const Curvature& c, const Eigen::Matrix4d& m) {
  const Eigen::MatrixXd dyn = m;
  CaseTable table;
  for (std::size_t i = 0; i < kCases.size(); ++i) {
    const auto& r = kCases[i].roles;
    const QuadDistances q = extract_quad(dyn, r[0], r[1], r[2], r[3]);
    if (cosq_admissible(c, q)) table.values[i] = cosq_k(c, q);
  }
  return table;
}

std::pair<ModelPoint, ModelPoint> halve_in_model(const ModelPoint& A, const ModelPoint& P,
                                                 const ModelPoint& B, const ModelPoint& Q) {
  if (model_distance(A, P) == 0.0 || model_distance(B, Q) == 0.0)
    throw Error(ErrorKind::Usage, "bound vectors must be non-zero");
  return {geodesic_midpoint(A, P), geodesic_midpoint(B, Q)};
}

}  // namespace catk
