#include "catk/conditions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string_view>
#include <thread>

#include "catk/cosq.hpp"
#include "catk/error.hpp"
#include "cosq_kernel.hpp"

namespace catk {

namespace {

struct Candidate {
  double margin = 0.0;
  double value = 0.0;
  std::array<int, 4> idx{};
  int count = 0;
  std::string_view label;
};

// Total order: larger margin first, then point labels, then case label.
class CandidateOrder {
 public:
  explicit CandidateOrder(const std::vector<std::string>& labels) : labels_(&labels) {}

  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.margin != b.margin) return a.margin > b.margin;
    const int n = std::min(a.count, b.count);
    for (int i = 0; i < n; ++i) {
      const auto& la = (*labels_)[a.idx[i]];
      const auto& lb = (*labels_)[b.idx[i]];
      if (la != lb) return la < lb;
    }
    if (a.count != b.count) return a.count < b.count;
    return a.label < b.label;
  }

 private:
  const std::vector<std::string>* labels_;
};

struct Accumulator {
  std::size_t admissible = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::optional<Candidate> worst;
  std::vector<Candidate> kept;
};

class Collector {
 public:
  Collector(const CandidateOrder& order, std::size_t cap) : order_(order), cap_(cap) {}

  void observe(Accumulator& acc, const Candidate& c, bool violating) const {
    if (!acc.worst || order_(c, *acc.worst)) acc.worst = c;
    if (!violating) return;
    ++acc.violations;
    if (cap_ == 0) return;
    acc.kept.push_back(c);
    if (acc.kept.size() >= 2 * cap_ + 64) prune(acc.kept);
  }

  void merge(Accumulator& into, Accumulator&& from) const {
    into.admissible += from.admissible;
    into.skipped += from.skipped;
    into.violations += from.violations;
    if (from.worst && (!into.worst || order_(*from.worst, *into.worst))) into.worst = from.worst;
    into.kept.insert(into.kept.end(), from.kept.begin(), from.kept.end());
    prune(into.kept);
  }

  void prune(std::vector<Candidate>& v) const {
    if (v.size() > cap_) {
      std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cap_), v.end(), order_);
      v.resize(cap_);
    }
  }

  const CandidateOrder& order() const { return order_; }

 private:
  CandidateOrder order_;
  std::size_t cap_;
};

unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

// Runs fn(outer, acc) for outer in [0, n) striped over workers and merges the
// per-worker accumulators in worker order.
template <class Fn>
Accumulator run_scan(int n, unsigned jobs, const Collector& col, Fn fn) {
  jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max(1, n)));
  std::vector<Accumulator> parts(jobs);
  if (jobs == 1) {
    for (int o = 0; o < n; ++o) fn(o, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int o = static_cast<int>(w); o < n; o += static_cast<int>(jobs)) fn(o, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Accumulator total;
  for (auto& p : parts) col.merge(total, std::move(p));
  return total;
}

Witness to_witness(const Candidate& c, const std::vector<std::string>& labels) {
  Witness w;
  for (int i = 0; i < c.count; ++i) w.points.push_back(labels[c.idx[i]]);
  w.case_label = std::string(c.label);
  w.value = c.value;
  w.margin = c.margin;
  return w;
}

ConditionReport finish(Accumulator&& acc, const Collector& col,
                       const std::vector<std::string>& labels) {
  ConditionReport r;
  r.admissible_count = acc.admissible;
  r.skipped_count = acc.skipped;
  r.violation_count = acc.violations;
  r.verdict = acc.admissible == 0 ? Verdict::Vacuous
                                  : (acc.violations > 0 ? Verdict::Fails : Verdict::Holds);
  if (acc.worst) {
    r.worst_margin = acc.worst->margin;
    r.extremal = to_witness(*acc.worst, labels);
  }
  std::sort(acc.kept.begin(), acc.kept.end(), col.order());
  for (const auto& c : acc.kept) r.witnesses.push_back(to_witness(c, labels));
  return r;
}

void require_nonzero(const Curvature& c, const char* what) {
  if (c.zero()) throw Error(ErrorKind::Usage, std::string(what) + " requires K != 0");
}

// Whether a triple of points (two may coincide) embeds in the model plane.
bool triple_embeds(const Curvature& c, const Eigen::MatrixXd& d, int i, int j, int k) {
  const double a = d(j, k), b = d(i, k), e = d(i, j);
  if (a > b + e || b > a + e || e > a + b) return false;
  return !c.positive() || a + b + e < 2.0 * c.diameter_bound();
}

enum class Side { Upper, Lower };

ConditionReport scan_cosq(const Curvature& c, const SemimetricSpace& s, const ScanOptions& opts,
                          Side side) {
  require_nonzero(c, "the cosq conditions");
  const int n = s.size();
  const Eigen::MatrixXd& D = s.dist();
  Eigen::MatrixXd H(n, n), S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      H(i, j) = detail::half_versine(c, D(i, j));
      S(i, j) = c.sin_k(D(i, j));
    }
  std::vector<std::array<int, 2>> vecs;
  for (int t = 0; t < n; ++t)
    for (int h = 0; h < n; ++h)
      if (t != h) vecs.push_back({t, h});
  const int nv = static_cast<int>(vecs.size());
  const double bound = c.diameter_bound();
  const double sign = c.sign();
  const double tol = opts.tolerance;
  const Collector col(CandidateOrder(s.labels()), opts.max_witnesses);

  auto body = [&](int v1, Accumulator& acc) {
    const int t1 = vecs[v1][0], h1 = vecs[v1][1];
    for (int v2 = v1; v2 < nv; ++v2) {
      const int t2 = vecs[v2][0], h2 = vecs[v2][1];
      if (c.positive() && !(D(t1, h1) < bound && D(t2, h2) < bound && D(t1, t2) < bound)) {
        ++acc.skipped;
        continue;
      }
      ++acc.admissible;
      const bool t2_new = t2 != t1 && t2 != h1;
      const bool h2_new = h2 != t1 && h2 != h1;
      Candidate cand;
      if (t2_new && h2_new) {
        std::array<int, 4> pts{t1, h1, t2, h2};
        std::array<int, 4> sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        auto role = [&](int p) {
          return static_cast<int>(std::find(sorted.begin(), sorted.end(), p) - sorted.begin());
        };
        const std::array<int, 4> roles{role(t1), role(h1), role(t2), role(h2)};
        const int ci = *case_index(roles[0], roles[1], roles[2], roles[3]);
        if (kCases[ci].roles != roles) pts = {t2, h2, t1, h1};
        cand.idx = pts;
        cand.label = kCases[ci].label;
      } else {
        const int third = t2_new ? t2 : (h2_new ? h2 : t1);
        if (triple_embeds(c, D, t1, h1, third)) continue;
        cand.idx = {t1, h1, t2, h2};
        cand.label = "shared";
      }
      cand.count = 4;
      cand.value = detail::cosq_from_half_versines(sign, H(t1, h1), H(t2, h2), H(t1, t2),
                                                   H(h1, h2), H(h1, t2), H(t1, h2), S(t1, h1),
                                                   S(t2, h2));
      cand.margin = side == Side::Upper ? cand.value - 1.0 : -1.0 - cand.value;
      col.observe(acc, cand, cand.margin > tol);
    }
  };
  return finish(run_scan(nv, opts.jobs, col, body), col, s.labels());
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Vacuous: return "vacuous";
  }
  return "unknown";
}

const char* to_string(GromovSign s) noexcept { return s == GromovSign::Plus ? "plus" : "minus"; }

ConditionReport check_metric(const SemimetricSpace& s, const ScanOptions& opts) {
  const int n = s.size();
  const Eigen::MatrixXd& D = s.dist();
  const Collector col(CandidateOrder(s.labels()), opts.max_witnesses);
  auto body = [&](int i, Accumulator& acc) {
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        ++acc.admissible;
        // The longest side goes last: (x, y, z) with |xz| compared to |xy| + |yz|.
        std::array<int, 3> t{i, k, j};
        double deficit = D(i, j) - (D(i, k) + D(k, j));
        const double d2 = D(i, k) - (D(i, j) + D(j, k));
        const double d3 = D(j, k) - (D(j, i) + D(i, k));
        if (d2 > deficit) {
          deficit = d2;
          t = {i, j, k};
        }
        if (d3 > deficit) {
          deficit = d3;
          t = {j, i, k};
        }
        Candidate cand;
        cand.idx = {t[0], t[1], t[2], 0};
        cand.count = 3;
        cand.label = "triangle";
        cand.value = deficit;
        cand.margin = deficit;
        col.observe(acc, cand, deficit > opts.tolerance);
      }
  };
  return finish(run_scan(n, opts.jobs, col, body), col, s.labels());
}

ConditionReport check_upper(const Curvature& c, const SemimetricSpace& s, const ScanOptions& opts) {
  return scan_cosq(c, s, opts, Side::Upper);
}

ConditionReport check_lower(const Curvature& c, const SemimetricSpace& s, const ScanOptions& opts) {
  return scan_cosq(c, s, opts, Side::Lower);
}

OneSidedReport check_one_sided(const Curvature& c, const SemimetricSpace& s,
                               const ScanOptions& opts) {
  OneSidedReport r{check_upper(c, s, opts), check_lower(c, s, opts), Verdict::Fails};
  if (r.upper.holds() || r.lower.holds())
    r.verdict = Verdict::Holds;
  else if (r.upper.verdict == Verdict::Vacuous && r.lower.verdict == Verdict::Vacuous)
    r.verdict = Verdict::Vacuous;
  return r;
}

namespace {

struct GromovTerms {
  double lhs = 0.0;
  double rhs = 0.0;
  double max_entry = 0.0;
};

GromovTerms gromov_terms(const Curvature& c, GromovSign sign, double a12, double a13, double a14,
                         double a23, double a24, double a34) {
  const double c12 = c.cos_k(a12), c13 = c.cos_k(a13), c14 = c.cos_k(a14);
  const double c23 = c.cos_k(a23), c24 = c.cos_k(a24), c34 = c.cos_k(a34);
  const double core = (c23 + c12 * c34) * (1.0 + c14) - (c12 + c24) * (c34 + c13);
  GromovTerms t;
  t.lhs = (sign == GromovSign::Plus ? 1.0 : -1.0) * c.sign() * core;
  t.rhs = c.sin_k(a12) * c.sin_k(a34) * (1.0 + c14);
  t.max_entry = std::max({a12, a13, a14, a23, a24, a34});
  return t;
}

double entry_bound(const Curvature& c) { return 0.5 * std::numbers::pi / c.kappa(); }

}  // namespace

bool gromov_membership(const Curvature& c, GromovSign sign, const Eigen::Matrix4d& m, double tol) {
  require_nonzero(c, "curvature class membership");
  const GromovTerms t =
      gromov_terms(c, sign, m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3));
  if (c.positive() && t.max_entry > entry_bound(c)) return false;
  return t.lhs <= (1.0 + tol) * t.rhs;
}

ConditionReport check_gromov_class(const Curvature& c, GromovSign sign, const SemimetricSpace& s,
                                   const ScanOptions& opts) {
  require_nonzero(c, "curvature class membership");
  const int n = s.size();
  const Eigen::MatrixXd& D = s.dist();
  const Collector col(CandidateOrder(s.labels()), opts.max_witnesses);
  const std::string_view label = sign == GromovSign::Plus ? "plus" : "minus";
  auto body = [&](int p1, Accumulator& acc) {
    for (int p2 = 0; p2 < n; ++p2) {
      if (p2 == p1) continue;
      for (int p3 = 0; p3 < n; ++p3) {
        if (p3 == p1 || p3 == p2) continue;
        for (int p4 = 0; p4 < n; ++p4) {
          if (p4 == p1 || p4 == p2 || p4 == p3) continue;
          ++acc.admissible;
          const GromovTerms t = gromov_terms(c, sign, D(p1, p2), D(p1, p3), D(p1, p4),
                                             D(p2, p3), D(p2, p4), D(p3, p4));
          Candidate cand;
          cand.idx = {p1, p2, p3, p4};
          cand.count = 4;
          bool member = true;
          if (c.positive() && t.max_entry > entry_bound(c)) {
            member = false;
            cand.label = "entry-bound";
            cand.value = t.max_entry;
            cand.margin = t.max_entry - entry_bound(c);
          } else {
            member = t.lhs <= (1.0 + opts.tolerance) * t.rhs;
            cand.label = label;
            cand.value = t.lhs / t.rhs;
            cand.margin = cand.value - 1.0;
          }
          col.observe(acc, cand, !member);
        }
      }
    }
  };
  return finish(run_scan(n, opts.jobs, col, body), col, s.labels());
}

std::pair<double, double> k_euler_equality_sides(const Curvature& c, double a, double b, double cc,
                                                 double dd, double e, double f, double g) {
  require_nonzero(c, "the quadrangle equality");
  const double lhs = c.cos_k(a) + c.cos_k(b) + c.cos_k(cc) + c.cos_k(dd);
  const double rhs = 4.0 * c.cos_k(0.5 * e) * c.cos_k(0.5 * f) * c.cos_k(g);
  return {lhs, rhs};
}

ConditionReport check_k_euler(const Curvature& c, const SemimetricSpace& s,
                              const ScanOptions& opts) {
  require_nonzero(c, "the quadrilateral inequality");
  const int n = s.size();
  const Eigen::MatrixXd& D = s.dist();
  const Collector col(CandidateOrder(s.labels()), opts.max_witnesses);
  const double max_perimeter = c.positive() ? 2.0 * c.diameter_bound() : 0.0;

  auto evaluate = [&](Accumulator& acc, std::array<int, 4> q, std::string_view label) {
    const double perimeter = D(q[0], q[1]) + D(q[1], q[2]) + D(q[2], q[3]) + D(q[3], q[0]);
    if (c.positive() && perimeter >= max_perimeter) {
      ++acc.skipped;
      return;
    }
    ++acc.admissible;
    const double lhs = c.cos_k(D(q[0], q[1])) + c.cos_k(D(q[1], q[2])) +
                       c.cos_k(D(q[2], q[3])) + c.cos_k(D(q[3], q[0]));
    const double rhs = 4.0 * c.cos_k(0.5 * D(q[0], q[2])) * c.cos_k(0.5 * D(q[1], q[3]));
    Candidate cand;
    cand.idx = q;
    cand.count = 4;
    cand.label = label;
    cand.value = lhs - rhs;
    const double excess = c.positive() ? lhs - rhs : rhs - lhs;
    cand.margin = excess / std::max(1.0, std::abs(rhs));
    col.observe(acc, cand, cand.margin > opts.tolerance);
  };

  auto body = [&](int i, Accumulator& acc) {
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          evaluate(acc, {i, j, k, l}, "cyclic");
          evaluate(acc, {i, j, l, k}, "cyclic");
          evaluate(acc, {i, k, j, l}, "cyclic");
        }
        if (!triple_embeds(c, D, i, j, k)) {
          evaluate(acc, {i, j, i, k}, "repeated-vertex");
          evaluate(acc, {j, i, j, k}, "repeated-vertex");
          evaluate(acc, {k, i, k, j}, "repeated-vertex");
        }
      }
  };
  return finish(run_scan(n, opts.jobs, col, body), col, s.labels());
}

WeakConvexityReport weak_convexity_scan(const SemimetricSpace& s, double eps,
                                        const std::vector<double>& lambdas) {
  if (lambdas.empty()) throw Error(ErrorKind::Usage, "at least one division ratio is required");
  for (double l : lambdas)
    if (!(l > 0.0 && l < 1.0)) throw Error(ErrorKind::Usage, "division ratios must lie in (0, 1)");
  const int n = s.size();
  const Eigen::MatrixXd& D = s.dist();
  WeakConvexityReport r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++r.pairs_checked;
      ConvexityPair best{i, j, i, lambdas.front(), std::numeric_limits<double>::infinity()};
      for (double lambda : lambdas)
        for (int k = 0; k < n; ++k) {
          const double dev = std::max(std::abs(D(i, k) - lambda * D(i, j)),
                                      std::abs(D(j, k) - (1.0 - lambda) * D(i, j)));
          if (dev < best.deviation) {
            best.best = k;
            best.lambda = lambda;
            best.deviation = dev;
          }
        }
      if (best.deviation > eps) r.failing.push_back(best);
    }
  std::stable_sort(r.failing.begin(), r.failing.end(),
                   [](const ConvexityPair& a, const ConvexityPair& b) {
                     return a.deviation > b.deviation;
                   });
  return r;
}

}  // namespace catk
