#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catk/conditions.hpp"
#include "catk/cosq.hpp"
#include "catk/curvature.hpp"
#include "catk/model_point.hpp"
#include "catk/semimetric.hpp"

namespace catk {

// Graph metric of a segment of length `arm` glued at one end to the middle O
// of a segment BQ of length `bar`. Labels are A, [P], O, B, Q followed by
// subdivision points: `subdivisions` extra points spaced evenly on each of
// the three legs OA, OB, OQ, numbered outward from O. P sits on the arm at
// distance p_offset from A.
SemimetricSpace t_graph(double arm, double bar, std::optional<double> p_offset = std::nullopt,
                        int subdivisions = 0);

// Four labeled points in role order A, P, B, Q with the given six distances.
SemimetricSpace four_point_space(const std::array<std::string, 4>& labels,
                                 const QuadDistances& q);

// A, B, P on the sphere with |AB| = ab, |AP| = ap and angle theta at A; Q is
// P reflected through the midpoint of AB, and |PQ| is then increased by eps.
// Labels A, P, B, Q.
SemimetricSpace symmetric_spherical_quad(const Curvature& c, double ab, double ap,
                                         double theta, double eps);

struct TrapezoidParams {
  double base = 1.0;    // |AB|
  double leg_a = 0.5;   // |AP|
  double angle = 1.0;   // angle at A between AB and AP
  double leg_b = 0.5;   // |BQ|
  // false: BQ is the transport of AP and cosq(AP, BQ) = 1.
  // true: BQ is reversed and cosq(AP, BQ) = -1.
  bool antiparallel = false;
};

// Points A, P, B, Q in the model plane with BQ the transport of AP along AB.
std::array<ModelPoint, 4> levi_civita_trapezoid(const Curvature& c, const TrapezoidParams& p);

// Quadrangle A, B, C, D whose diagonals AC and BD share their midpoint.
// The diagonals have lengths e = |AC|, f = |BD| and meet at angle `angle`.
std::array<ModelPoint, 4> parallelogramoid(const Curvature& c, double e, double f,
                                           double angle);

struct NumericExpectation {
  std::string what;
  std::string source;
  // Expected value as printed (table entries) or as a closed form.
  std::string expected_text;
  double expected = 0.0;
  // Absolute tolerance; half a unit in the last printed decimal for tables.
  double tolerance = 0.0;
  std::function<double()> compute;
};

struct VerdictExpectation {
  std::string what;
  std::string source;
  Verdict expected = Verdict::Holds;
  std::function<Verdict()> compute;
};

struct NamedExample {
  std::string name;
  std::string description;
  SemimetricSpace space;
  Curvature curvature;
  std::vector<NumericExpectation> numeric;
  std::vector<VerdictExpectation> verdicts;
};

// Tolerance for a value printed with `decimals` digits after the point.
double printed_tolerance(int decimals);
// Expectation for a printed decimal such as "-0.58".
NumericExpectation printed_value(std::string what, std::string source, const std::string& text,
                                 std::function<double()> compute);

// The four-point examples use these lengths.
NamedExample ex_counter_1(double eps = 0.1);
NamedExample exfpc_pos_a();
NamedExample exfpc_pos_b_qualitative();
NamedExample exfpc_neg_a();
NamedExample exfpc_neg_b();
NamedExample concl_remarks();
NamedExample ex_to_extr_th();

std::vector<NamedExample> registry();

// Parameter grid on which the perturbed symmetric quadrangle separates the
// upper and lower conditions.
struct SymmetricQuadSweep {
  std::vector<double> ab;
  std::vector<double> ap;
  std::vector<double> theta;
  double eps = 0.1;
};

SymmetricQuadSweep symmetric_quad_sweep();

}  // namespace catk
