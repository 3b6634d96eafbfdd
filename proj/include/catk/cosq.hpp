#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "catk/curvature.hpp"
#include "catk/model_point.hpp"

namespace catk {

// Six distances of the bound-vector pair (AP, BQ).
struct QuadDistances {
  double x = 0.0;  // |AP|
  double y = 0.0;  // |BQ|
  double a = 0.0;  // |AB|
  double b = 0.0;  // |PQ|
  double d = 0.0;  // |PB|
  double f = 0.0;  // |AQ|

  // The same pair read as (BQ, AP).
  QuadDistances swapped() const noexcept { return {y, x, a, b, f, d}; }
};

// Distances for the pair (t1->h1, t2->h2) read off a distance matrix.
QuadDistances extract_quad(const Eigen::MatrixXd& m, int t1, int h1, int t2, int h2);

// K>0 needs x, y, a < pi/kappa; always true otherwise.
bool cosq_admissible(const Curvature& c, const QuadDistances& q) noexcept;

// Quadrilateral cosine. Values slightly outside [-1,1] are returned as is.
double cosq_k(const Curvature& c, const QuadDistances& q);

// Role indices within a labeled quadruple.
inline constexpr int kA = 0;
inline constexpr int kP = 1;
inline constexpr int kB = 2;
inline constexpr int kQ = 3;

struct CaseSpec {
  std::string_view label;
  std::array<int, 4> roles;  // tail1, head1, tail2, head2
};

// The twelve pairings of two disjoint bound vectors over {A,P,B,Q}, one per
// unordered pair.
inline constexpr std::array<CaseSpec, 12> kCases{{
    {"I", {kA, kP, kB, kQ}},
    {"II", {kA, kP, kQ, kB}},
    {"III", {kA, kB, kP, kQ}},
    {"IV", {kA, kB, kQ, kP}},
    {"V", {kA, kQ, kP, kB}},
    {"VI", {kA, kQ, kB, kP}},
    {"VII", {kP, kA, kB, kQ}},
    {"VIII", {kP, kA, kQ, kB}},
    {"IX", {kP, kB, kQ, kA}},
    {"X", {kP, kQ, kB, kA}},
    {"XI", {kB, kA, kQ, kP}},
    {"XII", {kB, kP, kQ, kA}},
}};

// Case index for a pair of disjoint bound vectors given in roles, in either
// order. Returns nullopt when the roles are not four distinct values.
std::optional<int> case_index(int t1, int h1, int t2, int h2) noexcept;

struct CaseTable {
  // nullopt marks a case that fails the K>0 distance bound.
  std::array<std::optional<double>, 12> values;

  const std::optional<double>& operator[](int i) const { return values.at(i); }
};

// `m` is indexed by roles A, P, B, Q.
CaseTable twelve_cases(const Curvature& c, const Eigen::Matrix4d& m);

// Midpoints of AP and BQ.
std::pair<ModelPoint, ModelPoint> halve_in_model(const ModelPoint& A, const ModelPoint& P,
                                                 const ModelPoint& B, const ModelPoint& Q);

}  // namespace catk
