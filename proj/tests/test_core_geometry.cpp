#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "spiralbound/core_geometry.hpp"
#include "spiralbound/errors.hpp"
#include "support/log_spiral.hpp"

namespace sb = spiralbound;
namespace st = spiralbound::testing;

namespace {

// Independent check: A(x; c, phi) lies on the circle through (-c, 0) and
// (c, 0) with centre (0, -c cot phi).
double circle_residual(double c, double phi, double x, double y) {
  const double cy = -c * std::cos(phi) / std::sin(phi);
  return std::hypot(x, y - cy) - c / std::abs(std::sin(phi));
}

}  // namespace

TEST(WrapAngle, MapsIntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(sb::wrap_angle(sb::kPi), sb::kPi);
  EXPECT_DOUBLE_EQ(sb::wrap_angle(-sb::kPi), sb::kPi);
  EXPECT_NEAR(sb::wrap_angle(3.0 * sb::kPi + 0.25), -sb::kPi + 0.25, 1e-12);
  EXPECT_NEAR(sb::wrap_angle(-0.5), -0.5, 0.0);
}

TEST(ChordFrame, MapsChordEndsToAxis) {
  const sb::ChordFrame f(sb::Point(1.0, 2.0), sb::Point(4.0, 6.0));
  EXPECT_DOUBLE_EQ(f.half_length(), 2.5);
  EXPECT_TRUE(f.to_local(sb::Point(1.0, 2.0)).isApprox(sb::Point(-2.5, 0.0), 1e-14));
  EXPECT_TRUE(f.to_local(sb::Point(4.0, 6.0)).isApprox(sb::Point(2.5, 0.0), 1e-14));
  const sb::Point p(-3.0, 0.7);
  EXPECT_TRUE(f.to_global(f.to_local(p)).isApprox(p, 1e-14));
  EXPECT_NEAR(f.angle_to_global(0.0), std::atan2(4.0, 3.0), 1e-15);
}

TEST(ChordFrame, RejectsZeroLengthChord) {
  EXPECT_THROW(sb::ChordFrame(sb::Point(1.0, 1.0), sb::Point(1.0, 1.0)), sb::DomainError);
}

TEST(Arc, MidpointHeightIsHalfAngleTangent) {
  EXPECT_NEAR(sb::arc_eval(sb::Arc(2.0, 0.6), 0.0), 0.618672, 1e-6);
  EXPECT_NEAR(sb::arc_eval(sb::Arc(2.0, 0.6), 0.0), 2.0 * std::tan(0.3), 1e-15);
}

TEST(Arc, VanishesAtChordEnds) {
  const sb::Arc arc(1.5, -1.1);
  EXPECT_NEAR(sb::arc_eval(arc, -1.5), 0.0, 1e-15);
  EXPECT_NEAR(sb::arc_eval(arc, 1.5), 0.0, 1e-15);
}

TEST(Arc, ZeroAngleIsTheChord) {
  const sb::Arc arc(1.0, 0.0);
  EXPECT_EQ(sb::arc_eval(arc, 0.3), 0.0);
  EXPECT_EQ(sb::arc_curvature(arc), 0.0);
}

TEST(Arc, RightAngleIsHalfCircle) {
  const sb::Arc arc(1.0, sb::kHalfPi);
  EXPECT_NEAR(sb::arc_eval(arc, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(sb::arc_eval(arc, 0.6), 0.8, 1e-15);
}

TEST(Arc, DomainErrors) {
  EXPECT_THROW(sb::Arc(0.0, 0.1), sb::DomainError);
  EXPECT_THROW(sb::Arc(-1.0, 0.1), sb::DomainError);
  EXPECT_THROW(sb::Arc(1.0, sb::kHalfPi + 1e-6), sb::DomainError);
  EXPECT_THROW(sb::arc_eval(sb::Arc(1.0, 0.3), 1.001), sb::DomainError);
}

TEST(ArcProperty, LiesOnItsCircleWithMatchingSlopeAndCurvature) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double c = 0.01 + 10.0 * u(rng);
    double phi = (u(rng) - 0.5) * sb::kPi;
    if (std::abs(phi) < 1e-3) phi = 1e-3;
    const sb::Arc arc(c, phi);
    EXPECT_NEAR(sb::arc_slope(arc, -c), std::tan(phi), 1e-9 * (1.0 + std::abs(std::tan(phi))));
    EXPECT_NEAR(sb::arc_slope(arc, c), -std::tan(phi), 1e-9 * (1.0 + std::abs(std::tan(phi))));
    EXPECT_NEAR(sb::arc_curvature(arc), -std::sin(phi) / c, 1e-15 / c);
    for (int k = 0; k < 20; ++k) {
      const double x = -c + 2.0 * c * u(rng);
      EXPECT_NEAR(circle_residual(c, phi, x, sb::arc_eval(arc, x)), 0.0, 1e-9 * c / std::abs(std::sin(phi)));
    }
  }
}

TEST(ArcProperty, HeightIsMonotoneInAngle) {
  for (double x : {-0.9, -0.3, 0.0, 0.5}) {
    double prev = -HUGE_VAL;
    for (int k = -15; k <= 15; ++k) {
      const double h = sb::arc_eval(sb::Arc(1.0, 0.1 * k), x);
      EXPECT_GT(h, prev);
      prev = h;
    }
  }
}

TEST(Biarc, CurvaturesForUnitFamilyParameter) {
  const auto spec = sb::biarc_from_p(1.0, 0.5, 0.1, 1.0);
  EXPECT_NEAR(spec.a.value(), -0.7749457452655426, 1e-14);
  EXPECT_NEAR(spec.b.value(), 0.3953536233081677, 1e-14);
  EXPECT_NEAR(sb::biarc_residual(spec), 0.0, 1e-15);
  EXPECT_FALSE(spec.is_degenerate());
  ASSERT_TRUE(spec.join.has_value());
}

TEST(Biarc, CurvatureMakingNegativeFamilyParameterIsInfeasible) {
  // p = -sin(omega) / (a c + sin(alpha)) = -1 here.
  EXPECT_THROW(sb::biarc_from_a(1.0, 0.5, 0.1, -0.1838954), sb::InfeasibleCurvature);
}

TEST(Biarc, RoundTripThroughStartCurvature) {
  const auto spec = sb::biarc_from_a(1.0, 0.5, 0.1, -0.7749457452655426);
  EXPECT_NEAR(spec.p.value(), 1.0, 1e-12);
  EXPECT_NEAR(spec.b.value(), 0.3953536233081677, 1e-12);
}

TEST(Biarc, DegenerateFamilyEndsAreLensArcs) {
  const double c = 0.8, alpha = 0.4, beta = 0.3;
  const auto zero = sb::biarc_from_p(c, alpha, beta, 0.0);
  const auto inf = sb::biarc_from_p(c, alpha, beta, sb::ExtendedReal::pos_inf());
  EXPECT_EQ(zero.degeneracy, sb::BiarcSpec::Degeneracy::start_impulse);
  EXPECT_TRUE(zero.a.is_neg_inf());
  EXPECT_EQ(inf.degeneracy, sb::BiarcSpec::Degeneracy::end_impulse);
  EXPECT_TRUE(inf.b.is_pos_inf());
  for (int k = 0; k <= 100; ++k) {
    const double x = -c + 2.0 * c * k / 100.0;
    EXPECT_EQ(sb::biarc_eval(zero, x), sb::arc_eval(sb::Arc(c, -beta), x));
    EXPECT_EQ(sb::biarc_eval(inf, x), sb::arc_eval(sb::Arc(c, alpha), x));
  }
  EXPECT_TRUE(std::holds_alternative<sb::Arc>(sb::to_boundary(zero)));
}

TEST(Biarc, NegativeLensImpulseSigns) {
  const auto zero = sb::biarc_from_p(1.0, -0.4, 0.1, 0.0);
  const auto inf = sb::biarc_from_p(1.0, -0.4, 0.1, sb::ExtendedReal::pos_inf());
  EXPECT_TRUE(zero.a.is_pos_inf());
  EXPECT_TRUE(inf.b.is_neg_inf());
}

TEST(Biarc, OppositeEndAnglesMergeIntoOneArc) {
  const auto spec = sb::biarc_from_p(1.0, 0.35, -0.35, 2.0);
  EXPECT_EQ(spec.degeneracy, sb::BiarcSpec::Degeneracy::merged);
  EXPECT_NEAR(sb::biarc_eval(spec, 0.2), sb::arc_eval(sb::Arc(1.0, 0.35), 0.2), 1e-15);
  EXPECT_NEAR(spec.a.value(), -std::sin(0.35), 1e-15);
}

TEST(Biarc, InfiniteCurvatureSelectsDegenerateMember) {
  EXPECT_EQ(sb::biarc_from_a(1.0, 0.4, 0.3, sb::ExtendedReal::neg_inf()).degeneracy,
            sb::BiarcSpec::Degeneracy::start_impulse);
  EXPECT_EQ(sb::biarc_from_b(1.0, 0.4, 0.3, sb::ExtendedReal::pos_inf()).degeneracy,
            sb::BiarcSpec::Degeneracy::end_impulse);
}

TEST(Biarc, HiddenDegenerateCases) {
  const double c = 1.0, alpha = 0.4, beta = 0.3;
  // b c = sin(beta) forces p = 0.
  EXPECT_EQ(sb::biarc_from_b(c, alpha, beta, std::sin(beta) / c).degeneracy,
            sb::BiarcSpec::Degeneracy::start_impulse);
  // a c = -sin(alpha) forces p = infinity.
  EXPECT_EQ(sb::biarc_from_a(c, alpha, beta, -std::sin(alpha) / c).degeneracy,
            sb::BiarcSpec::Degeneracy::end_impulse);
}

TEST(Biarc, RejectsNegativeFamilyParameter) {
  EXPECT_THROW(sb::biarc_from_p(1.0, 0.2, 0.2, -0.5), sb::DomainError);
  EXPECT_THROW(sb::biarc_from_p(1.0, 0.2, 0.2, sb::ExtendedReal::neg_inf()), sb::DomainError);
}

TEST(BiarcProperty, PiecesAreTangentCirclesMeetingOnTheLineOfCentres) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const double c = 0.1 + 3.0 * u(rng);
    const double alpha = (u(rng) - 0.5) * 2.8;
    const double beta = (u(rng) - 0.5) * 2.8;
    if (std::abs(alpha + beta) < 1e-2) continue;
    const double p = std::exp(4.0 * (u(rng) - 0.5));
    const auto spec = sb::biarc_from_p(c, alpha, beta, p);
    const double a = spec.a.value(), b = spec.b.value();
    if (std::abs(a) < 1e-6 || std::abs(b) < 1e-6) continue;
    EXPECT_NEAR(sb::biarc_residual(spec), 0.0, 1e-12);
    EXPECT_EQ(b > a, alpha + beta > 0);

    const sb::Point c1 = st::circle_centre(sb::Point(-c, 0.0), alpha, a);
    const sb::Point c2 = st::circle_centre(sb::Point(c, 0.0), beta, b);
    const auto contact = st::tangency_point(c1, 1.0 / a, c2, 1.0 / b);
    ASSERT_TRUE(contact.has_value());
    EXPECT_NEAR(spec.join->x(), contact->x(), 1e-9 * (1.0 + c));
    EXPECT_NEAR(spec.join->y(), contact->y(), 1e-9 * (1.0 + c));

    // Both pieces on their circles; height and slope continuous at the join.
    for (int k = 0; k <= 20; ++k) {
      const double x = -c + 2.0 * c * k / 20.0;
      const sb::Point q(x, sb::biarc_eval(spec, x));
      const bool left = x <= spec.join->x();
      const double err = left ? (q - c1).norm() - std::abs(1.0 / a) : (q - c2).norm() - std::abs(1.0 / b);
      EXPECT_NEAR(err, 0.0, 1e-8 * (1.0 + std::abs(left ? 1.0 / a : 1.0 / b)));
    }
    const double jx = spec.join->x();
    const double h = 1e-7 * c;
    if (jx - h > -c && jx + h < c) {
      EXPECT_NEAR(sb::biarc_eval(spec, jx - h), sb::biarc_eval(spec, jx + h), 1e-6 * c);
      // dy/dx changes at rate k (1 + y'^2)^(3/2) on either side.
      const double s0 = sb::biarc_slope(spec, jx - h);
      const double drift = h * (std::abs(a) + std::abs(b)) * std::pow(1.0 + 2.0 * s0 * s0, 1.5);
      EXPECT_NEAR(s0, sb::biarc_slope(spec, jx + h), 1e-8 + drift);
    }
    EXPECT_NEAR(sb::biarc_eval(spec, -c), 0.0, 1e-12 * c);
    EXPECT_NEAR(sb::biarc_eval(spec, c), 0.0, 1e-12 * c);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(BiarcProperty, EndSlopesMatchEndTangents) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = (u(rng) - 0.5) * 2.0, beta = (u(rng) - 0.5) * 2.0;
    if (std::abs(alpha + beta) < 1e-3) continue;
    const auto spec = sb::biarc_from_p(1.0, alpha, beta, 0.1 + 5.0 * u(rng));
    EXPECT_NEAR(sb::biarc_slope(spec, -1.0), std::tan(alpha), 1e-9);
    EXPECT_NEAR(sb::biarc_slope(spec, 1.0), std::tan(beta), 1e-9);
  }
}

TEST(BiarcProperty, StaysInsideItsLens) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = (u(rng) - 0.3) * 2.0, beta = (u(rng) - 0.3) * 2.0;
    if (alpha + beta < 1e-3) continue;
    const auto spec = sb::biarc_from_p(1.0, alpha, beta, std::exp(6.0 * (u(rng) - 0.5)));
    for (int k = 0; k <= 50; ++k) {
      const double x = -1.0 + 2.0 * k / 50.0;
      const double y = sb::biarc_eval(spec, x);
      EXPECT_GE(y, sb::arc_eval(sb::Arc(1.0, -beta), x) - 1e-12);
      EXPECT_LE(y, sb::arc_eval(sb::Arc(1.0, alpha), x) + 1e-12);
    }
  }
}

TEST(BiarcProperty, MirrorAndReflectionPreserveTheCurve) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double c = 0.5 + u(rng);
    const double alpha = (u(rng) - 0.5) * 2.0, beta = (u(rng) - 0.5) * 2.0;
    if (std::abs(alpha + beta) < 1e-3) continue;
    const double p = std::exp(3.0 * (u(rng) - 0.5));
    const sb::BoundaryCurve curve = sb::to_boundary(sb::biarc_from_p(c, alpha, beta, p));
    const sb::BoundaryCurve mirror = sb::mirrored(curve);
    const sb::BoundaryCurve reflection = sb::reflected(curve);
    const auto& m = std::get<sb::BiarcSpec>(mirror);
    EXPECT_NEAR(sb::biarc_residual(m), 0.0, 1e-12);
    EXPECT_NEAR(m.p.value(), 1.0 / p, 1e-12 / p);
    for (int k = 0; k <= 40; ++k) {
      const double x = -c + 2.0 * c * k / 40.0;
      EXPECT_NEAR(sb::eval(mirror, -x), -sb::eval(curve, x), 1e-12);
      EXPECT_NEAR(sb::eval(reflection, x), -sb::eval(curve, x), 1e-12);
    }
  }
}

TEST(BoundaryCurve, ArcMirrorNegatesAngle) {
  const auto m = sb::mirrored(sb::BoundaryCurve(sb::Arc(1.0, 0.3)));
  EXPECT_DOUBLE_EQ(std::get<sb::Arc>(m).phi(), -0.3);
  EXPECT_DOUBLE_EQ(sb::half_chord(m), 1.0);
}
