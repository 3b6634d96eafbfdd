// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "catk/conditions.hpp"
#include "catk/cosq.hpp"
#include "catk/properties.hpp"
#include "catk/spaces.hpp"
#include "catk/trig.hpp"
#include "oracles.hpp"

using namespace catk;
using std::numbers::pi;

namespace {

int g_failed = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const Curvature kPos(1.0);
const Curvature kNeg(-1.0);
const Curvature kFlat(0.0);

double pair_cosq(const Curvature& c, const SemimetricSpace& s, const char* t1, const char* h1,
                 const char* t2, const char* h2) {
  return cosq_k(c, extract_quad(s.dist(), s.index_of(t1), s.index_of(h1), s.index_of(t2),
                                s.index_of(h2)));
}

void table_reproduction() {
  int entries = 0, passed = 0;
  double worst = 0.0;
  for (const NamedExample& ex : {exfpc_pos_a(), exfpc_neg_a(), exfpc_neg_b(), concl_remarks()}) {
    for (const NumericExpectation& n : ex.numeric) {
      if (n.source.rfind("reference table", 0) != 0) continue;
      ++entries;
      const double diff = std::abs(n.compute() - n.expected);
      worst = std::max(worst, diff / n.tolerance);
      if (diff <= n.tolerance) ++passed;
    }
  }
  report(1, "table reproduction", entries == 60 && passed == entries,
         fmt("%d/%d entries within half a printed unit (worst %.2f of the allowance)", passed,
             entries, worst));
}

void closed_forms() {
  double worst = 0.0;
  for (double eps : {0.01, 0.05, 0.1, 0.2}) {
    const SemimetricSpace s = t_graph(pi / 4 + eps, pi / 2 + 2 * eps, eps);
    const double up = (1 + std::sin(2 * eps)) / (1 - std::sin(2 * eps));
    const double down =
        -(1 + std::sin(2 * eps)) * std::cos(eps) / ((1 - std::sin(eps)) * std::cos(2 * eps));
    worst = std::max(worst, std::abs(pair_cosq(kPos, s, "B", "Q", "A", "P") - up));
    worst = std::max(worst, std::abs(pair_cosq(kPos, s, "B", "Q", "P", "A") - down));
  }
  report(2, "T-graph closed forms", worst <= 1e-12,
         fmt("max deviation %.2e over eps in {0.01, 0.05, 0.1, 0.2} (limit 1e-12)", worst));
}

void midpoint_values() {
  const double pos = point_on_side_distance(kPos, 1.0, 1.0, 0.8, 0.5);
  const double neg = point_on_side_distance(kNeg, 1.0, 1.0, 0.8, 0.5);
  const bool ok = std::abs(pos - 0.9439) <= 5e-4 && std::abs(neg - 0.8944) <= 5e-4;
  report(3, "point-on-side distances", ok,
         fmt("K=1 %.6f vs 0.9439, K=-1 %.6f vs 0.8944 (limit 5e-4)", pos, neg));
}

void model_bound() {
  const int n = 10000;
  const PropertyRun pos = run_property(kPos, PropertyCheck::Bound, n, 1, 1e-9);
  const PropertyRun neg = run_property(kNeg, PropertyCheck::Bound, n, 1, 1e-9);
  const bool ok = pos.failures == 0 && neg.failures == 0 && pos.trials - pos.skipped >= n &&
                  neg.trials - neg.skipped >= n;
  report(4, "model-space bound", ok,
         fmt("K=1 %d quadruples, %d violations (max excess %.2e); K=-1 %d quadruples, %d "
             "violations (max excess %.2e)",
             pos.trials - pos.skipped, pos.failures, pos.max_residual, neg.trials - neg.skipped,
             neg.failures, neg.max_residual));
}

void transport_oracle() {
  bool ok = true;
  std::string detail;
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    const PropertyRun r = run_property(c, PropertyCheck::Transport, 1500, 1, 1e-9);
    const int evaluated = r.trials - r.skipped;
    // Second, independent transport on the same kind of draws.
    double independent = 0.0;
    int count = 0;
    for (std::uint64_t seed = 0; count < 1000; ++seed) {
      const auto p = sample_model_points(c, 4, 50000 + seed, default_diam_cap(c));
      const double direct = cosq_k(c, extract_quad(oracle::distances(p), 0, 1, 2, 3));
      independent = std::max(
          independent, std::abs(direct - oracle::cosq_by_transport(c.K(), p[0], p[1], p[2], p[3])));
      ++count;
    }
    ok = ok && r.failures == 0 && evaluated >= 1000 && independent <= 1e-9;
    detail += fmt("K=%g %d evaluated, max %.2e, independent %.2e; ", c.K(), evaluated,
                  r.max_residual, independent);
  }
  detail += "limit 1e-9";
  report(5, "transport oracle", ok, detail);
}

void halving() {
  const PropertyRun r = run_property(kPos, PropertyCheck::Halving, 1000, 1, 1e-9);
  report(6, "halving invariance", r.failures == 0 && r.trials - r.skipped >= 1000,
         fmt("%d spherical quadruples, max deviation %.2e (limit 1e-9)", r.trials - r.skipped,
             r.max_residual));
}

void trig_identity() {
  bool ok = true;
  std::string detail;
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    double worst = 0.0;
    int count = 0;
    for (std::uint64_t seed = 0; count < 1000; ++seed) {
      const auto p = sample_model_points(c, 3, seed, default_diam_cap(c), 2);
      const double x = model_distance(p[0], p[1]), y = model_distance(p[0], p[2]),
                   z = model_distance(p[1], p[2]);
      const double alpha = law_of_cosines_angle(c, {z, x, y});
      const double beta = law_of_cosines_angle(c, {y, x, z});
      worst = std::max(worst, std::abs(sper_ident_residual(c, x, y, z, alpha, beta)));
      ++count;
    }
    // Collinear cases: C between A and B, A between B and C, B between A and C.
    double degenerate = 0.0;
    for (double u : {0.2, 0.5, 0.9})
      for (double v : {0.1, 0.3, 0.6}) {
        const double x = u + v, y = u;
        degenerate = std::max(degenerate, std::abs(sper_ident_residual(c, x, y, x - y, 0, 0)));
        degenerate = std::max(degenerate, std::abs(sper_ident_residual(c, u, v, u + v, pi, 0)));
        degenerate = std::max(degenerate, std::abs(sper_ident_residual(c, y, x, x - y, 0, pi)));
      }
    ok = ok && worst <= 1e-12 && degenerate <= 1e-12;
    detail += fmt("K=%g %d triangles max %.2e, collinear max %.2e; ", c.K(), count, worst,
                  degenerate);
  }
  detail += "limit 1e-12";
  report(7, "triangle identity", ok, detail);
}

void euler_equality() {
  const PropertyRun pos = run_property(kPos, PropertyCheck::EulerEquality, 1000, 1, 1e-9);
  const PropertyRun neg = run_property(kNeg, PropertyCheck::EulerEquality, 1000, 1, 1e-9);
  const auto [lhs, rhs] = k_euler_equality_sides(kNeg, 1, 1, 1, 3, 2, 2, 1);
  const double closed = 3 * std::cosh(1.0) + std::cosh(3.0);
  const double cubed = 4 * std::pow(std::cosh(1.0), 3);
  const double collinear =
      std::max({std::abs(lhs - rhs), std::abs(lhs - closed), std::abs(rhs - cubed)});
  const bool ok = pos.failures == 0 && neg.failures == 0 && pos.trials >= 1000 &&
                  neg.trials >= 1000 && collinear <= 1e-12;
  report(8, "quadrangle equality", ok,
         fmt("K=1 %d quadrangles max %.2e, K=-1 %d quadrangles max %.2e (limit 1e-9); "
             "collinear %.2e (limit 1e-12)",
             pos.trials, pos.max_residual, neg.trials, neg.max_residual, collinear));
}

SemimetricSpace as_space(const Eigen::MatrixXd& m) {
  return SemimetricSpace(SemimetricSpace::default_labels(static_cast<int>(m.rows())), m);
}

// Model points jittered entrywise and closed under shortest paths.
Eigen::MatrixXd perturbed_model(const Curvature& c, std::mt19937_64& rng, int n) {
  const double cap = c.positive() ? 0.5 * pi : 2.0;
  Eigen::MatrixXd m = oracle::distances(sample_model_points(c, n, rng(), cap));
  std::uniform_real_distribution<double> jitter(-0.08, 0.08);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      m(i, j) = m(j, i) = std::clamp(m(i, j) * (1.0 + jitter(rng)), 1e-3, cap);
  return oracle::metric_closure(m);
}

void cross_equivalence() {
  std::mt19937_64 rng(404);
  bool ok = true;
  std::string detail;
  for (const Curvature& c : {kPos, kNeg}) {
    int spaces = 0, agree = 0, up_fails = 0, low_fails = 0;
    for (int i = 0; i < 1000; ++i) {
      const int n = 4 + i % 3;
      const Eigen::MatrixXd m = (i % 2 == 0)
                                    ? oracle::random_band_metric(rng, n, c.positive() ? pi / 4 : 0.5)
                                    : perturbed_model(c, rng, n);
      const SemimetricSpace s = as_space(m);
      const Verdict up = check_upper(c, s).verdict;
      const Verdict low = check_lower(c, s).verdict;
      const bool same = check_gromov_class(c, GromovSign::Plus, s).verdict == up &&
                        check_gromov_class(c, GromovSign::Minus, s).verdict == low;
      ++spaces;
      agree += same ? 1 : 0;
      up_fails += up == Verdict::Fails ? 1 : 0;
      low_fails += low == Verdict::Fails ? 1 : 0;
    }
    ok = ok && agree == spaces;
    detail += fmt("K=%g %d/%d agree (upper fails %d, lower fails %d); ", c.K(), agree, spaces,
                  up_fails, low_fails);
  }
  detail.resize(detail.size() - 2);
  report(9, "curvature class vs four-point conditions", ok, detail);
}

void non_metric_spaces() {
  std::mt19937_64 rng(808);
  bool ok = true;
  std::string detail;
  for (const Curvature& c : {kPos, kNeg}) {
    int generated = 0, both_fail = 0;
    for (int i = 0; i < 250; ++i) {
      const int n = 4 + i % 3;
      Eigen::MatrixXd m = oracle::random_band_metric(rng, n, 0.2);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int a = pick(rng);
      int b = pick(rng);
      while (b == a) b = pick(rng);
      double bound = 0.0;
      for (int k = 0; k < n; ++k)
        if (k != a && k != b) bound = std::max(bound, m(a, k) + m(k, b));
      m(a, b) = m(b, a) = bound + std::uniform_real_distribution<double>(0.01, 0.6)(rng);
      const SemimetricSpace s = as_space(m);
      if (check_metric(s).verdict != Verdict::Fails) continue;
      ++generated;
      const OneSidedReport r = check_one_sided(c, s);
      if (r.upper.fails() && r.lower.fails()) ++both_fail;
    }
    ok = ok && generated >= 200 && both_fail == generated;
    detail += fmt("K=%g %d/%d fail both; ", c.K(), both_fail, generated);
  }
  detail.resize(detail.size() - 2);
  report(10, "non-metric spaces fail both conditions", ok, detail);
}

void verdict_patterns() {
  ScanOptions opts;
  opts.tolerance = 1e-3;
  struct Case {
    NamedExample ex;
    Curvature c;
    Verdict upper, lower;
  };
  const std::vector<Case> cases{{exfpc_neg_a(), kNeg, Verdict::Fails, Verdict::Holds},
                                {exfpc_neg_b(), kNeg, Verdict::Holds, Verdict::Fails},
                                {exfpc_pos_a(), kPos, Verdict::Fails, Verdict::Holds}};
  bool ok = true;
  std::string detail;
  for (const Case& k : cases) {
    const Verdict up = check_upper(k.c, k.ex.space, opts).verdict;
    const Verdict low = check_lower(k.c, k.ex.space, opts).verdict;
    ok = ok && up == k.upper && low == k.lower;
    detail += fmt("%s upper %s lower %s; ", k.ex.name.c_str(), to_string(up), to_string(low));
  }
  detail.resize(detail.size() - 2);
  report(11, "verdict patterns", ok, detail);
}

void extremal_configurations() {
  std::mt19937_64 rng(1212);
  bool ok = true;
  std::string detail;
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    // For K>0, P stays within pi/2 of the midpoint of AB.
    const double top = c.positive() ? 0.75 : 2.0;
    std::uniform_real_distribution<double> len(0.05, top), ang(0.05, pi - 0.05);
    double worst = 0.0;
    const int draws = 200;
    for (int i = 0; i < draws; ++i) {
      TrapezoidParams p{len(rng), len(rng), ang(rng), len(rng), i % 2 == 1};
      const auto q = levi_civita_trapezoid(c, p);
      const double v =
          cosq_k(c, extract_quad(oracle::distances({q[0], q[1], q[2], q[3]}), 0, 1, 2, 3));
      worst = std::max(worst, std::abs(v - (p.antiparallel ? -1.0 : 1.0)));
    }
    ok = ok && worst <= 1e-9;
    detail += fmt("K=%g %d trapezoids max %.2e; ", c.K(), draws, worst);
  }
  const SemimetricSpace t = t_graph(pi / 4, pi / 2);
  const double extremal = pair_cosq(kPos, t, "A", "O", "B", "Q");
  ok = ok && std::abs(extremal - 1.0) <= 1e-12;
  detail += fmt("extremal T-graph %.15f (limit 1e-12)", extremal);
  report(12, "extremal configurations", ok, detail);
}

}  // namespace

int main() {
  table_reproduction();
  closed_forms();
  midpoint_values();
  model_bound();
  transport_oracle();
  halving();
  trig_identity();
  euler_equality();
  cross_equivalence();
  non_metric_spaces();
  verdict_patterns();
  extremal_configurations();
  std::printf("%d of 12 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
