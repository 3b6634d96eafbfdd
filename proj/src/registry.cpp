#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "catk/spaces.hpp"
#include "catk/trig.hpp"

namespace catk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTableTolerance = 1e-3;

using Printed = std::array<const char*, 12>;

Eigen::Matrix4d as_matrix4(const SemimetricSpace& s) {
  Eigen::Matrix4d m = s.dist();
  return m;
}

std::string case_what(int i, const Curvature& c) {
  const auto& r = kCases[i].roles;
  const char names[] = {'A', 'P', 'B', 'Q'};
  std::string w = "cosq K=" + std::to_string(static_cast<int>(c.K())) + " case " +
                  std::string(kCases[i].label) + " (";
  w += names[r[0]];
  w += names[r[1]];
  w += ", ";
  w += names[r[2]];
  w += names[r[3]];
  return w + ")";
}

void add_table(NamedExample& ex, const std::string& source, const Curvature& c,
               const Printed& printed) {
  const Eigen::Matrix4d m = as_matrix4(ex.space);
  for (int i = 0; i < 12; ++i) {
    ex.numeric.push_back(printed_value(case_what(i, c), source, printed[i],
                                       [c, m, i] { return *twelve_cases(c, m)[i]; }));
  }
}

VerdictExpectation verdict_of(std::string what, std::string source, Verdict expected,
                              std::function<Verdict()> compute) {
  return {std::move(what), std::move(source), expected, std::move(compute)};
}

void add_cosq_verdicts(NamedExample& ex, const std::string& source, const Curvature& c,
                       Verdict upper, Verdict lower, double tol) {
  const SemimetricSpace s = ex.space;
  ScanOptions opts;
  opts.tolerance = tol;
  const std::string k = "K=" + std::to_string(static_cast<int>(c.K()));
  ex.verdicts.push_back(verdict_of("upper condition, " + k, source, upper,
                                   [c, s, opts] { return check_upper(c, s, opts).verdict; }));
  ex.verdicts.push_back(verdict_of("lower condition, " + k, source, lower,
                                   [c, s, opts] { return check_lower(c, s, opts).verdict; }));
}

double pair_cosq(const Curvature& c, const SemimetricSpace& s, const char* t1, const char* h1,
                 const char* t2, const char* h2) {
  return cosq_k(c, extract_quad(s.dist(), s.index_of(t1), s.index_of(h1), s.index_of(t2),
                                s.index_of(h2)));
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

NamedExample ex_counter_1(double eps) {
  const Curvature c(1.0);
  NamedExample ex{"ex_counter_1",
                  "T-shaped graph: arm AO of length pi/4+eps glued to the middle O of BQ "
                  "(length pi/2+2eps), P on the arm with |AP| = eps; eps = " + fixed(eps),
                  t_graph(kPi / 4 + eps, kPi / 2 + 2 * eps, eps), c, {}, {}};
  const std::string src = "closed forms for the T-shaped graph";
  const SemimetricSpace s = ex.space;
  const double up = (1 + std::sin(2 * eps)) / (1 - std::sin(2 * eps));
  const double down =
      -(1 + std::sin(2 * eps)) * std::cos(eps) / ((1 - std::sin(eps)) * std::cos(2 * eps));
  ex.numeric.push_back({"cosq K=1 (BQ, AP)", src, "(1+sin 2eps)/(1-sin 2eps)", up, 1e-12,
                        [c, s] { return pair_cosq(c, s, "B", "Q", "A", "P"); }});
  ex.numeric.push_back({"cosq K=1 (BQ, PA)", src, "-(1+sin 2eps)cos eps/((1-sin eps)cos 2eps)",
                        down, 1e-12, [c, s] { return pair_cosq(c, s, "B", "Q", "P", "A"); }});
  add_cosq_verdicts(ex, "T-shaped graph violates both conditions", c, Verdict::Fails,
                    Verdict::Fails, kDefaultTolerance);
  return ex;
}

NamedExample exfpc_pos_a() {
  const Curvature c(1.0);
  const SemimetricSpace g = t_graph(kPi / 4 + 0.1, kPi / 2 + 0.2);
  SemimetricSpace s({"A", "P", "B", "Q"}, g.subspace(std::vector<std::string>{"A", "O", "B", "Q"}).dist());
  NamedExample ex{"exfpc_pos_a",
                  "T-shaped graph with |AP| = |BP| = |PQ| = pi/4+0.1 (P the glue point)", s, c,
                  {}, {}};
  add_table(ex, "reference table, spherical four-point space (a)", c,
            {"1.496", "1.496", "-0.58", "1.496", "-0.58", "1.496", "-0.58", "-0.58", "-0.58",
             "-0.58", "1.496", "1.496"});
  add_cosq_verdicts(ex, "spherical four-point space (a)", c, Verdict::Fails, Verdict::Holds,
                    kTableTolerance);
  return ex;
}

SymmetricQuadSweep symmetric_quad_sweep() {
  SymmetricQuadSweep sw;
  for (int i = 0; i < 5; ++i) sw.ab.push_back(1.5 + 0.05 * i);
  for (int i = 0; i < 4; ++i) sw.ap.push_back(0.7 + 0.05 * i);
  for (int i = 0; i < 5; ++i) sw.theta.push_back(1.5 + 0.05 * i);
  sw.eps = 0.1;
  return sw;
}

NamedExample exfpc_pos_b_qualitative() {
  const Curvature c(1.0);
  const double eps = 0.1;
  NamedExample ex{"exfpc_pos_b_qualitative",
                  "A, B, P on the unit sphere with |AB| = pi/2, |AP| = pi/4, right angle at A; "
                  "Q the reflection of P through the midpoint of AB; |PQ| increased by 0.1",
                  symmetric_spherical_quad(c, kPi / 2, kPi / 4, kPi / 2, eps), c, {}, {}};
  add_table(ex, "reference table, spherical four-point space (b)", c,
            {"-1.168", "0.826", "0.871", "-0.107", "0.707", "-1.084", "0.826", "-1.404", "-1.202",
             "-0.107", "0.871", "0.707"});
  ex.numeric.push_back({"cosq K=1 (AP, BQ) before perturbation", "symmetric quadrangle", "-1",
                        -1.0, 1e-9, [c] {
                          const SemimetricSpace s0 =
                              symmetric_spherical_quad(c, kPi / 2, kPi / 4, kPi / 2, 0.0);
                          return pair_cosq(c, s0, "A", "P", "B", "Q");
                        }});
  const std::string src = "spherical four-point space (b)";
  add_cosq_verdicts(ex, src, c, Verdict::Holds, Verdict::Fails, kTableTolerance);
  auto sweep = [c](bool upper) {
    const SymmetricQuadSweep sw = symmetric_quad_sweep();
    for (double ab : sw.ab)
      for (double ap : sw.ap)
        for (double th : sw.theta) {
          const SemimetricSpace s = symmetric_spherical_quad(c, ab, ap, th, sw.eps);
          const Verdict v = upper ? check_upper(c, s).verdict : check_lower(c, s).verdict;
          if (v != (upper ? Verdict::Holds : Verdict::Fails)) return v;
        }
    return upper ? Verdict::Holds : Verdict::Fails;
  };
  ex.verdicts.push_back(verdict_of("upper condition across the parameter sweep", src,
                                   Verdict::Holds, [sweep] { return sweep(true); }));
  ex.verdicts.push_back(verdict_of("lower condition across the parameter sweep", src,
                                   Verdict::Fails, [sweep] { return sweep(false); }));
  return ex;
}

NamedExample exfpc_neg_a() {
  const Curvature c(-1.0);
  NamedExample ex{"exfpc_neg_a",
                  "|AP| = |BQ| = 1, |AB| = 2, |PQ| = 2.697, |PB| = |AQ| = 2.44",
                  four_point_space({"A", "P", "B", "Q"}, {1, 1, 2, 2.697, 2.44, 2.44}), c, {}, {}};
  add_table(ex, "reference table, hyperbolic four-point space (a)", c,
            {"1.0347", "-0.8133", "0.7495", "-0.9998", "0.4534", "-0.9133", "-0.8133", "0.1465",
             "-0.9511", "-0.9998", "0.7495", "0.4534"});
  add_cosq_verdicts(ex, "hyperbolic four-point space (a)", c, Verdict::Fails, Verdict::Holds,
                    kTableTolerance);
  return ex;
}

NamedExample exfpc_neg_b() {
  const Curvature c(-1.0);
  NamedExample ex{"exfpc_neg_b",
                  "|AP| = |BQ| = 1, |AB| = 2, |PQ| = 3.027, |PB| = |AQ| = 2.43",
                  four_point_space({"A", "P", "B", "Q"}, {1, 1, 2, 3.027, 2.43, 2.43}), c, {}, {}};
  add_table(ex, "reference table, hyperbolic four-point space (b)", c,
            {"-1.184", "0.922", "0.522", "-0.944", "0.807", "-1.008", "0.922", "-1.077", "-1.003",
             "-0.944", "0.522", "0.807"});
  add_cosq_verdicts(ex, "hyperbolic four-point space (b)", c, Verdict::Holds, Verdict::Fails,
                    kTableTolerance);
  return ex;
}

NamedExample concl_remarks() {
  const Curvature pos(1.0);
  const Curvature neg(-1.0);
  // Points A, B, O, C play the roles A, P, B, Q.
  NamedExample ex{"concl_remarks",
                  "|AB| = 0.8, |BC| = 1, |CO| = 0.95, |AO| = 0.4, |BO| = 0.4, |AC| = 1; "
                  "O lies between A and B",
                  four_point_space({"A", "B", "O", "C"}, {0.8, 0.95, 0.4, 1, 0.4, 1}), pos, {}, {}};
  add_table(ex, "reference table, triangular quadruple, K=1", pos,
            {"0.0012", "0.2048", "-0.2865", "0.6466", "-0.2865", "0.2841", "0.0012", "0.2048",
             "0.6466", "0.2841", "-0.4756", "-0.4756"});
  add_table(ex, "reference table, triangular quadruple, K=-1", neg,
            {"-0.0106", "-0.1647", "-0.6208", "0.3287", "-0.6208", "0.6406", "-0.0106", "-0.1647",
             "0.3287", "0.6406", "-0.4887", "-0.4887"});
  const std::string src = "model midpoint distance for the triangle ABC";
  ex.numeric.push_back(printed_value("|CO'| in the K=1 model triangle", src, "0.9439", [pos] {
    return point_on_side_distance(pos, 1.0, 1.0, 0.8, 0.5);
  }));
  ex.numeric.push_back(printed_value("|CO'| in the K=-1 model triangle", src, "0.8944", [neg] {
    return point_on_side_distance(neg, 1.0, 1.0, 0.8, 0.5);
  }));
  const SemimetricSpace s = ex.space;
  ex.verdicts.push_back(verdict_of("metric", "triangular quadruple", Verdict::Holds,
                                   [s] { return check_metric(s).verdict; }));
  add_cosq_verdicts(ex, "triangular quadruple", pos, Verdict::Holds, Verdict::Holds,
                    kDefaultTolerance);
  add_cosq_verdicts(ex, "triangular quadruple", neg, Verdict::Holds, Verdict::Holds,
                    kDefaultTolerance);
  ex.verdicts.push_back(verdict_of("curvature class plus, K=1", "triangular quadruple",
                                   Verdict::Holds, [s, pos] {
                                     return check_gromov_class(pos, GromovSign::Plus, s).verdict;
                                   }));
  return ex;
}

NamedExample ex_to_extr_th() {
  const Curvature c(1.0);
  NamedExample ex{"ex_to_extr_th",
                  "T-shaped graph with eps = 0: arm of length pi/4, bar of length pi/2; "
                  "diameter pi/2",
                  t_graph(kPi / 4, kPi / 2), c, {}, {}};
  const SemimetricSpace s = ex.space;
  // With eps = 0 the point P coincides with the arm end A.
  ex.numeric.push_back({"cosq K=1 (PO, BQ), P the arm end", "extremal T-shaped graph", "1", 1.0,
                        1e-12, [c, s] { return pair_cosq(c, s, "A", "O", "B", "Q"); }});
  add_cosq_verdicts(ex, "extremal T-shaped graph", c, Verdict::Holds, Verdict::Holds,
                    kDefaultTolerance);
  return ex;
}

std::vector<NamedExample> registry() {
  return {ex_counter_1(), exfpc_pos_a(),  exfpc_pos_b_qualitative(), exfpc_neg_a(),
          exfpc_neg_b(),  concl_remarks(), ex_to_extr_th()};
}

}  // namespace catk
