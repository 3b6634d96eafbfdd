#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "catk/curvature.hpp"
#include "catk/semimetric.hpp"

namespace catk {

enum class Verdict { Holds, Fails, Vacuous };

const char* to_string(Verdict v) noexcept;

struct Witness {
  std::vector<std::string> points;
  std::string case_label;
  double value = 0.0;
  // Positive when the configuration violates the condition.
  double margin = 0.0;
};

struct ConditionReport {
  Verdict verdict = Verdict::Vacuous;
  // Largest margin over evaluated configurations.
  std::optional<double> worst_margin;
  // Configuration attaining worst_margin.
  std::optional<Witness> extremal;
  // Violations, sorted by margin (descending) then labels; capped.
  std::vector<Witness> witnesses;
  std::size_t violation_count = 0;
  std::size_t admissible_count = 0;
  std::size_t skipped_count = 0;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
  bool fails() const noexcept { return verdict == Verdict::Fails; }
};

struct ScanOptions {
  double tolerance = kDefaultTolerance;
  // 0 means one worker per hardware thread.
  unsigned jobs = 1;
  // Maximum number of witnesses kept in the report.
  std::size_t max_witnesses = 64;
};

// Triangle inequality over all triples; margin is the deficit b - (a + c).
// Vacuous for fewer than three points.
ConditionReport check_metric(const SemimetricSpace& s, const ScanOptions& opts = {});

// cosq <= 1 + tol over all pairs of non-zero bound vectors. Pairs whose points
// form a triple (or pair) that embeds in the model plane are certified
// without evaluation; pairs spread over four points, and pairs on triples that
// do not embed, are evaluated. For K>0 a pair is admissible only when
// x, y, a < pi/kappa. Throws Error(Usage) for K=0.
ConditionReport check_upper(const Curvature& c, const SemimetricSpace& s,
                            const ScanOptions& opts = {});
// cosq >= -1 - tol, same enumeration as check_upper.
ConditionReport check_lower(const Curvature& c, const SemimetricSpace& s,
                            const ScanOptions& opts = {});

struct OneSidedReport {
  ConditionReport upper;
  ConditionReport lower;
  Verdict verdict = Verdict::Vacuous;
};

OneSidedReport check_one_sided(const Curvature& c, const SemimetricSpace& s,
                               const ScanOptions& opts = {});

enum class GromovSign { Plus, Minus };

const char* to_string(GromovSign s) noexcept;

// Membership of the labeled matrix m (points P1..P4) in the curvature class.
// The inequality is tested as LHS <= (1 + tol) * RHS, which matches
// cosq <= 1 + tol on the pair (P1P2, P4P3). K>0 also requires every entry to
// be at most pi/(2 kappa). Throws Error(Usage) for K=0.
bool gromov_membership(const Curvature& c, GromovSign sign, const Eigen::Matrix4d& m,
                       double tol = 0.0);

// gromov_membership over every ordered 4-tuple of distinct points.
ConditionReport check_gromov_class(const Curvature& c, GromovSign sign,
                                   const SemimetricSpace& s, const ScanOptions& opts = {});

// Quadrilateral inequality for every quadruple in each of its three cyclic
// orders, plus quadruples with repeated opposite vertices on triples that
// do not embed in the model plane. K>0 skips quadruples of perimeter at
// least 2 pi/kappa. Margin is the signed violation divided by max(1, |RHS|).
ConditionReport check_k_euler(const Curvature& c, const SemimetricSpace& s,
                              const ScanOptions& opts = {});

// Both sides of the quadrangle equality: side lengths a, b, cc, dd,
// diagonals e, f and the distance g between the diagonal midpoints.
std::pair<double, double> k_euler_equality_sides(const Curvature& c, double a, double b,
                                                 double cc, double dd, double e, double f,
                                                 double g);

struct ConvexityPair {
  int i = 0;
  int j = 0;
  int best = 0;  // index of the best division point
  double lambda = 0.5;
  double deviation = 0.0;
};

struct WeakConvexityReport {
  std::size_t pairs_checked = 0;
  std::vector<ConvexityPair> failing;

  double pass_fraction() const noexcept {
    return pairs_checked == 0
               ? 1.0
               : 1.0 - static_cast<double>(failing.size()) / static_cast<double>(pairs_checked);
  }
};

// For every pair (A, B) and each lambda, finds the point C minimising
// max(|AC - lambda AB|, |BC - (1 - lambda) AB|). C ranges over all points,
// A and B included. Pairs whose best deviation exceeds eps are reported.
WeakConvexityReport weak_convexity_scan(const SemimetricSpace& s, double eps,
                                        const std::vector<double>& lambdas = {0.5});

}  // namespace catk
