#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "catk/error.hpp"
#include "catk/model_point.hpp"
#include "catk/properties.hpp"
#include "catk/trig.hpp"
#include "oracles.hpp"

using namespace catk;
using std::numbers::pi;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

const Curvature kPos(1.0);
const Curvature kNeg(-1.0);
const Curvature kFlat(0.0);

}  // namespace

TEST(Curvature, RegimeAndKappa) {
  EXPECT_EQ(Curvature(4.0).regime(), Regime::Positive);
  EXPECT_EQ(Curvature(0.0).regime(), Regime::Zero);
  EXPECT_EQ(Curvature(-0.25).regime(), Regime::Negative);
  EXPECT_DOUBLE_EQ(Curvature(-0.25).kappa(), 0.5);
  EXPECT_DOUBLE_EQ(Curvature(4.0).diameter_bound(), pi / 2);
  EXPECT_TRUE(std::isinf(kNeg.diameter_bound()));
  EXPECT_THROW(Curvature(std::nan("")), Error);
}

TEST(ModelPoint, RejectsPointsOffTheModel) {
  EXPECT_THROW(ModelPoint(vec({1, 1, 0}), kPos), Error);
  EXPECT_THROW(ModelPoint(vec({0, 0, -1}), kNeg), Error);
  EXPECT_THROW(ModelPoint(vec({1, 2}), kFlat), Error);
  EXPECT_NO_THROW(ModelPoint(vec({0.5, 0, 0}), Curvature(4.0)));
}

TEST(ModelDistance, Examples) {
  EXPECT_NEAR(model_distance(ModelPoint(vec({1, 0, 0}), kPos), ModelPoint(vec({0, 1, 0}), kPos)),
              pi / 2, 1e-15);
  EXPECT_NEAR(model_distance(ModelPoint(vec({0, 0, 0}), kFlat), ModelPoint(vec({3, 4, 0}), kFlat)),
              5.0, 1e-15);
  const ModelPoint o = ModelPoint::origin(kNeg);
  EXPECT_NEAR(model_distance(o, ModelPoint::from_polar(kNeg, 1.0, 0.3)), 1.0, 1e-15);
  EXPECT_NEAR(model_distance(ModelPoint(vec({0, 0, 1}), kPos), ModelPoint(vec({0, 0, -1}), kPos)),
              pi, 1e-15);
}

TEST(ModelDistance, MatchesAcosFormulaAndScalesWithCurvature) {
  for (double K : {1.0, 4.0, -1.0, -0.25, 0.0}) {
    const Curvature c(K);
    const auto pts = sample_model_points(c, 20, 7);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double d = model_distance(pts[0], pts[i]);
      EXPECT_NEAR(d, oracle::distance(K, pts[0].coords(), pts[i].coords()), 1e-7) << K;
      EXPECT_DOUBLE_EQ(d, model_distance(pts[i], pts[0]));
      if (c.positive()) {
        EXPECT_LE(d, pi / c.kappa());
      }
    }
  }
}

TEST(ModelDistance, RejectsMixedModels) {
  EXPECT_THROW(model_distance(ModelPoint::origin(kPos), ModelPoint::origin(kNeg)), Error);
  EXPECT_THROW(model_distance(ModelPoint::origin(kPos, 2), ModelPoint::origin(kPos, 3)), Error);
}

TEST(LawOfCosinesAngle, Examples) {
  EXPECT_NEAR(law_of_cosines_angle(kFlat, {1, 1, 1}), pi / 3, 1e-15);
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    EXPECT_NEAR(law_of_cosines_angle(c, {0.3, 0.5, 0.8}), 0.0, 1e-7);
    EXPECT_NEAR(law_of_cosines_angle(c, {1.3, 0.5, 0.8}), pi, 1e-7);
  }
}

TEST(LawOfCosinesAngle, OctantTriangle) {
  // Vertices on the coordinate axes of the unit sphere.
  const ModelPoint x(vec({1, 0, 0}), kPos), y(vec({0, 1, 0}), kPos), z(vec({0, 0, 1}), kPos);
  const TriangleSides s{model_distance(y, z), model_distance(x, z), model_distance(x, y)};
  EXPECT_NEAR(law_of_cosines_angle(kPos, s), pi / 2, 1e-14);
  EXPECT_NEAR(oracle::vertex_angle(1.0, x, y, z), pi / 2, 1e-14);
}

TEST(LawOfCosinesAngle, AgreesWithTangentAngles) {
  for (double K : {1.0, -1.0, 0.0, 2.5, -3.0}) {
    const Curvature c(K);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto p = sample_model_points(c, 3, seed, default_diam_cap(c), 2);
      const TriangleSides s{model_distance(p[1], p[2]), model_distance(p[0], p[2]),
                            model_distance(p[0], p[1])};
      EXPECT_NEAR(law_of_cosines_angle(c, s), oracle::vertex_angle(K, p[0], p[1], p[2]), 1e-9)
          << "K=" << K << " seed=" << seed;
    }
  }
}

TEST(LawOfCosinesAngle, Errors) {
  EXPECT_THROW(law_of_cosines_angle(kFlat, {3, 1, 1}), Error);
  EXPECT_THROW(law_of_cosines_angle(kFlat, {1, 0, 1}), Error);
  EXPECT_THROW(law_of_cosines_angle(kPos, {1, 1, 3.2}), Error);
  try {
    law_of_cosines_angle(kNeg, {5, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentSides);
  }
  // Rounding-level violations are clamped.
  EXPECT_NEAR(law_of_cosines_angle(kFlat, {2.0 + 1e-13, 1.0, 1.0}), pi, 1e-5);
}

TEST(LawOfCosinesSide, Examples) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    EXPECT_NEAR(law_of_cosines_side(c, 0.7, 0.4, 0.0), 0.3, 1e-12);
    EXPECT_NEAR(law_of_cosines_side(c, 0.7, 0.4, pi), 1.1, 1e-12);
  }
  EXPECT_NEAR(law_of_cosines_side(kPos, 2.0, 2.0, pi), 2 * pi - 4.0, 1e-12);
  EXPECT_LE(law_of_cosines_side(kPos, 2.0, 2.5, pi), pi);
  const double expected = std::acosh(std::cosh(1.0) * std::cosh(1.0));
  EXPECT_NEAR(law_of_cosines_side(kNeg, 1.0, 1.0, pi / 2), expected, 1e-14);
  // Hyperboloid: two unit geodesics from the vertex at a right angle.
  const ModelPoint o = ModelPoint::origin(kNeg);
  const double embedded =
      model_distance(ModelPoint::from_polar(kNeg, 1, 0), ModelPoint::from_polar(kNeg, 1, pi / 2));
  EXPECT_NEAR(embedded, expected, 1e-14);
  (void)o;
}

TEST(LawOfCosines, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> len(0.05, 1.4), ang(0.01, pi - 0.01);
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    for (int i = 0; i < 500; ++i) {
      const double b = len(rng), cc = len(rng), alpha = ang(rng);
      const double a = law_of_cosines_side(c, b, cc, alpha);
      EXPECT_NEAR(law_of_cosines_angle(c, {a, b, cc}), alpha, 1e-10);
    }
  }
}

TEST(LawOfSines, RatioIsConstant) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto p = sample_model_points(c, 3, seed, default_diam_cap(c), 2);
      const double a = model_distance(p[1], p[2]), b = model_distance(p[0], p[2]),
                   cc = model_distance(p[0], p[1]);
      const double A = law_of_cosines_angle(c, {a, b, cc});
      const double B = law_of_cosines_angle(c, {b, a, cc});
      const double C = law_of_cosines_angle(c, {cc, a, b});
      auto s = [&](double r) { return c.zero() ? r : c.sin_k(r); };
      const double ra = s(a) / std::sin(A), rb = s(b) / std::sin(B), rc = s(cc) / std::sin(C);
      if (std::min({std::sin(A), std::sin(B), std::sin(C)}) < 1e-3) continue;
      EXPECT_NEAR(ra, rb, 1e-10 * std::max(1.0, ra));
      EXPECT_NEAR(ra, rc, 1e-10 * std::max(1.0, ra));
    }
  }
}

TEST(PointOnSide, Endpoints) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    EXPECT_NEAR(point_on_side_distance(c, 0.9, 0.6, 0.7, 0.0), 0.6, 1e-12);
    EXPECT_NEAR(point_on_side_distance(c, 0.9, 0.6, 0.7, 1.0), 0.9, 1e-12);
  }
}

TEST(PointOnSide, ModelMidpointValues) {
  EXPECT_NEAR(point_on_side_distance(kPos, 1, 1, 0.8, 0.5), std::acos(std::cos(1) / std::cos(0.4)),
              1e-14);
  EXPECT_NEAR(point_on_side_distance(kNeg, 1, 1, 0.8, 0.5),
              std::acosh(std::cosh(1) / std::cosh(0.4)), 1e-14);
  EXPECT_NEAR(point_on_side_distance(kPos, 1, 1, 0.8, 0.5), 0.9439, 5e-5);
  EXPECT_NEAR(point_on_side_distance(kNeg, 1, 1, 0.8, 0.5), 0.8944, 5e-5);
}

TEST(PointOnSide, MidpointFormula) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 1.2);
  for (const Curvature& c : {kPos, kNeg}) {
    for (int i = 0; i < 300; ++i) {
      const double a = u(rng), b = u(rng);
      const double cc = std::uniform_real_distribution<double>(std::abs(a - b) + 0.01, a + b)(rng);
      const double v = (c.cos_k(a) + c.cos_k(b)) / (2.0 * c.cos_k(0.5 * cc));
      const double l = c.positive() ? std::acos(v) : std::acosh(v);
      EXPECT_NEAR(point_on_side_distance(c, a, b, cc, 0.5), l, 1e-12);
    }
  }
}

TEST(PointOnSide, MatchesEmbeddedTriangle) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto p = sample_model_points(c, 3, seed, default_diam_cap(c), 2);
      const double t = 0.01 * static_cast<double>(seed % 100);
      const ModelPoint m = geodesic_interpolate(p[0], p[1], t);
      EXPECT_NEAR(point_on_side_distance(c, model_distance(p[1], p[2]), model_distance(p[0], p[2]),
                                         model_distance(p[0], p[1]), t),
                  model_distance(m, p[2]), 1e-7);
    }
  }
}

TEST(PointOnSide, StaysWithinQuarterCircle) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, pi / 2);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng);
    const double cc = std::uniform_real_distribution<double>(std::abs(a - b) + 1e-3, a + b)(rng);
    for (double t = 0.0; t <= 1.0; t += 0.125)
      EXPECT_LE(point_on_side_distance(kPos, a, b, cc, t), pi / 2 + 1e-12);
  }
}

TEST(PointOnSide, Errors) {
  EXPECT_THROW(point_on_side_distance(kPos, 1, 1, 0.0, 0.5), Error);
  EXPECT_THROW(point_on_side_distance(kPos, 1, 1, 0.5, 1.5), Error);
  EXPECT_THROW(point_on_side_distance(kFlat, 3, 1, 1, 0.5), Error);
}

TEST(GeodesicInterpolate, Examples) {
  const ModelPoint p(vec({1, 0, 0}), kPos), q(vec({0, 1, 0}), kPos);
  const ModelPoint m = geodesic_interpolate(p, q, 0.5);
  EXPECT_NEAR((m.coords() - vec({1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0})).norm(), 0, 1e-15);
  const ModelPoint e = geodesic_interpolate(ModelPoint(vec({0, 0, 0}), kFlat),
                                            ModelPoint(vec({2, 4, 0}), kFlat), 0.5);
  EXPECT_NEAR((e.coords() - vec({1, 2, 0})).norm(), 0, 1e-15);
  EXPECT_NEAR((geodesic_interpolate(p, q, 0.0).coords() - p.coords()).norm(), 0, 1e-15);
  EXPECT_NEAR((geodesic_interpolate(p, q, 1.0).coords() - q.coords()).norm(), 0, 1e-15);
}

TEST(GeodesicInterpolate, IsometricParametrization) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Curvature& c : {kPos, kNeg, kFlat, Curvature(3.0), Curvature(-0.5)}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto p = sample_model_points(c, 2, seed, default_diam_cap(c));
      const double d = model_distance(p[0], p[1]);
      const double t = u(rng), s = u(rng);
      const ModelPoint a = geodesic_interpolate(p[0], p[1], t);
      const ModelPoint b = geodesic_interpolate(p[0], p[1], s);
      EXPECT_NEAR(model_distance(p[0], a), t * d, 1e-10);
      EXPECT_NEAR(model_distance(a, p[1]), (1 - t) * d, 1e-10);
      EXPECT_NEAR(model_distance(a, b), std::abs(t - s) * d, 1e-10);
    }
  }
}

TEST(GeodesicInterpolate, AntipodalPairsHaveNoShortest) {
  try {
    geodesic_interpolate(ModelPoint(vec({0, 0, 1}), kPos), ModelPoint(vec({0, 0, -1}), kPos), 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUniqueGeodesic);
  }
}

TEST(GeodesicReflect, Examples) {
  const ModelPoint p(vec({0.3, -1.0, 0}), kFlat), o(vec({1.0, 2.0, 0}), kFlat);
  EXPECT_NEAR((geodesic_reflect(p, o).coords() - (2 * o.coords() - p.coords())).norm(), 0, 1e-15);
  EXPECT_NEAR((geodesic_reflect(o, o).coords() - o.coords()).norm(), 0, 1e-15);
  for (const Curvature& c : {kPos, kNeg}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto pts = sample_model_points(c, 2, seed, default_diam_cap(c));
      const ModelPoint r = geodesic_reflect(pts[0], pts[1]);
      EXPECT_NEAR(model_distance(r, pts[1]), model_distance(pts[0], pts[1]), 1e-12);
      const ModelPoint mid = geodesic_midpoint(pts[0], r);
      EXPECT_NEAR(model_distance(mid, pts[1]), 0.0, 1e-9);
    }
  }
}

TEST(GeodesicReflect, UndefinedBeyondQuarterCircle) {
  try {
    geodesic_reflect(ModelPoint::from_polar(kPos, 1.6, 0.0), ModelPoint::origin(kPos));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReflectionUndefined);
  }
}

TEST(Oracle, CoincidentBasePointsGiveTheVertexAngle) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    const ModelPoint A = ModelPoint::origin(c);
    const ModelPoint P = ModelPoint::from_polar(c, 0.4, 0.2);
    const ModelPoint Q = ModelPoint::from_polar(c, 0.7, 1.3);
    EXPECT_NEAR(angle_and_transport_oracle(A, P, A, Q), std::cos(1.1), 1e-12);
  }
}

TEST(Oracle, UnitSquare) {
  const ModelPoint A(vec({0, 0, 0}), kFlat), P(vec({0, 1, 0}), kFlat), B(vec({1, 0, 0}), kFlat),
      Q(vec({1, 1, 0}), kFlat);
  EXPECT_NEAR(angle_and_transport_oracle(A, P, B, Q), 1.0, 1e-12);
}

TEST(Oracle, MatchesParallelTransport) {
  for (double K : {1.0, -1.0, 0.0}) {
    const Curvature c(K);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto p = sample_model_points(c, 4, seed, default_diam_cap(c));
      if (c.positive() && model_distance(p[1], geodesic_midpoint(p[0], p[2])) >= pi / 2) continue;
      EXPECT_NEAR(angle_and_transport_oracle(p[0], p[1], p[2], p[3]),
                  oracle::cosq_by_transport(K, p[0], p[1], p[2], p[3]), 1e-9);
    }
  }
}

TEST(SperIdentity, DegenerateCases) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    EXPECT_NEAR(sper_ident_residual(c, 1.1, 0.4, 0.7, 0.0, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(sper_ident_residual(c, 1.1, 0.4, 1.5, pi, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(sper_ident_residual(c, 0.4, 1.1, 0.7, 0.0, pi), 0.0, 1e-15);
  }
}

TEST(SperIdentity, EmbeddedTriangles) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto p = sample_model_points(c, 3, seed, default_diam_cap(c), 2);
      const double x = model_distance(p[0], p[1]), y = model_distance(p[0], p[2]),
                   z = model_distance(p[1], p[2]);
      const double alpha = law_of_cosines_angle(c, {z, x, y});
      const double beta = law_of_cosines_angle(c, {y, x, z});
      EXPECT_NEAR(sper_ident_residual(c, x, y, z, alpha, beta), 0.0, 1e-12);
      // A wrong side length leaves a visible residual.
      EXPECT_GT(std::abs(sper_ident_residual(c, x, y, z + 0.05, alpha, beta)), 1e-4);
    }
  }
}

TEST(Sampling, DeterministicAndOnTheModel) {
  for (const Curvature& c : {kPos, kNeg, kFlat}) {
    const auto a = sample_model_points(c, 5, 42);
    const auto b = sample_model_points(c, 5, 42);
    ASSERT_EQ(a.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(a[i].coords(), b[i].coords());
    const auto one = sample_model_points(c, 1, 1, std::nullopt, 2);
    EXPECT_EQ(one.front().coords().size(), 3);
  }
}

TEST(Sampling, RespectsDiameterCap) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = sample_model_points(kPos, 4, seed, pi / 2);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) EXPECT_LE(model_distance(p[i], p[j]), pi / 2);
  }
}

TEST(Sampling, Errors) {
  EXPECT_THROW(sample_model_points(kPos, 0, 1), Error);
  EXPECT_THROW(sample_model_points(kPos, 3, 1, 0.0), Error);
  EXPECT_THROW(sample_model_points(kPos, 3, 1, 2.0), Error);
  EXPECT_THROW(sample_model_points(kNeg, 3, 1, std::nullopt, 4), Error);
}
