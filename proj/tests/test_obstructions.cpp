#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "toric/domains.hpp"
#include "toric/errors.hpp"
#include "toric/obstructions.hpp"

using namespace toric;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

void expect_consistent(const Verdict& v) {
  if (v.status != VerdictStatus::Knotted) return;
  ASSERT_TRUE(v.window && v.delta_ell_upper && v.delta_u_lower);
  EXPECT_EQ(compare(*v.delta_ell_upper, *v.delta_u_lower, kAnalyticMargin), Comparison::Less);
  EXPECT_EQ(v.window->first.value(), v.delta_ell_upper->value());
  EXPECT_EQ(v.window->second.value(), v.delta_u_lower->value());
  EXPECT_GT(v.window->first.value(), 1.0);
  EXPECT_LE(v.window->second.value(), 2.0);
}

}  // namespace

TEST(DeltaULower, PolydiskAndEllipsoid) {
  EXPECT_EQ(delta_u_lower(ToricRegion::rectangle(1, R(3, 2))).rational(), R(5, 3));
  EXPECT_EQ(delta_u_lower(ToricRegion::rectangle(2, 7)).rational(), R(9, 7));
  EXPECT_EQ(delta_u_lower(ToricRegion::triangle(1, 2)).rational(), 1);
}

TEST(DeltaULower, LpBallBelowTwoClosedForm) {
  for (double p : {1.1, 1.25, 1.5, 1.8}) {
    const double q = p / (p - 2);
    const double expected = std::pow(std::pow(2.0, q - 1) + 0.5, -1 / std::abs(q));
    EXPECT_NEAR(delta_u_lower(ToricRegion::lp_ball(p, 1)).value(), expected, 1e-10) << p;
  }
}

TEST(Verdict, PolydiskCurve) {
  for (Rational s : {R(1), R(5, 4), R(3, 2), R(9, 5), R(199, 100)}) {
    auto v = knotted_verdict(ToricRegion::rectangle(1, s));
    ASSERT_EQ(v.status, VerdictStatus::Knotted) << s;
    const Rational case_a = R(1) + s / (R(1) + s);
    const Rational case_c = R(1) + (R(4) + s) / (R(2) + s * 3 + s * s);
    EXPECT_EQ(v.window->first.rational(), std::min(case_a, case_c));
    EXPECT_EQ(v.window->second.rational(), R(1) + R(1) / s);
    expect_consistent(v);
  }
  auto v = knotted_verdict(ToricRegion::rectangle(1, R(9, 5)));
  EXPECT_EQ(v.window->first.rational(), R(411, 266));
  EXPECT_EQ(v.window->second.rational(), R(14, 9));
}

TEST(Verdict, PolydiskAtRatioTwoIsInconclusive) {
  auto v = knotted_verdict(ToricRegion::rectangle(1, 2));
  EXPECT_EQ(v.status, VerdictStatus::Inconclusive);
  EXPECT_EQ(v.delta_ell_upper->rational(), R(3, 2));
  EXPECT_EQ(v.delta_u_lower->rational(), R(3, 2));
  EXPECT_FALSE(v.window);
}

TEST(Verdict, BallsAndEllipsoidsAreNotApplicable) {
  EXPECT_EQ(knotted_verdict(ToricRegion::triangle(1, 1)).status, VerdictStatus::NotApplicable);
  EXPECT_EQ(knotted_verdict(ToricRegion::triangle(1, 3)).status, VerdictStatus::NotApplicable);
  EXPECT_EQ(knotted_verdict(ToricRegion::lp_ball(2, 1)).status, VerdictStatus::NotApplicable);
}

TEST(Verdict, LpBallThreeHalves) {
  auto v = knotted_verdict(ToricRegion::lp_ball(1.5, 1));
  ASSERT_EQ(v.status, VerdictStatus::Knotted);
  EXPECT_NEAR(v.window->first.value(), std::cbrt(1.5), 1e-12);
  EXPECT_NEAR(v.window->second.value(), std::cbrt(16.0 / 9.0), 1e-12);
  EXPECT_EQ(v.case_label, "lp-ball");
}

TEST(Verdict, ScaleInvariant) {
  for (const auto& reg : {ToricRegion::rectangle(1, R(3, 2)), ToricRegion::quadrilateral(4, 5, 1, 2),
                          ToricRegion::quadrilateral(3, 3, 2, 2)}) {
    auto a = knotted_verdict(reg), b = knotted_verdict(scale_region(reg, R(7, 3)));
    EXPECT_EQ(a.status, b.status);
    ASSERT_EQ(a.window.has_value(), b.window.has_value());
    if (a.window) {
      EXPECT_EQ(a.window->first.rational(), b.window->first.rational());
      EXPECT_EQ(a.window->second.rational(), b.window->second.rational());
    }
  }
}

TEST(LpThreshold, CrossesAtLogNineOverLogSix) {
  EXPECT_EQ(lp_threshold_check(1.25), std::optional<bool>(true));
  EXPECT_EQ(lp_threshold_check(1.2), std::optional<bool>(false));
  EXPECT_EQ(lp_threshold_check(3), std::optional<bool>(true));
  EXPECT_EQ(lp_threshold_check(2), std::nullopt);
  const double crit = std::log(9.0) / std::log(6.0);
  EXPECT_EQ(lp_threshold_check(crit + 1e-6), std::optional<bool>(true));
  EXPECT_EQ(lp_threshold_check(crit - 1e-6), std::optional<bool>(false));
}

TEST(LpThreshold, MonotoneBelowTwo) {
  bool seen_true = false;
  for (int i = 1; i < 2000; ++i) {
    const double p = 2.0 * i / 2000;
    const bool v = *lp_threshold_check(p);
    if (seen_true) {
      EXPECT_TRUE(v) << p;
    }
    seen_true = seen_true || v;
  }
  EXPECT_TRUE(seen_true);
}

TEST(LpThreshold, VerdictsAgreeWithThreshold) {
  EXPECT_EQ(knotted_verdict(ToricRegion::lp_ball(1.25, 1)).status, VerdictStatus::Knotted);
  EXPECT_EQ(knotted_verdict(ToricRegion::lp_ball(3, 1)).status, VerdictStatus::Knotted);
  EXPECT_EQ(knotted_verdict(ToricRegion::lp_ball(1.2, 1)).status, VerdictStatus::Inconclusive);
}

TEST(PolydiskKnotCheck, Examples) {
  auto v = polydisk_knot_check(R(1, 2), R(3, 4), 1, 0);
  EXPECT_EQ(v.status, VerdictStatus::Knotted);
  ASSERT_FALSE(v.certificates.empty());
  EXPECT_TRUE(v.certificates.front().verified);
  EXPECT_NE(polydisk_knot_check(R(1, 2), 1, 1, 0).status, VerdictStatus::Knotted);
}

TEST(AllPoly, IntoRouteMatchesExplicitChoice) {
  auto p = allpoly_params(1);
  EXPECT_EQ(p.a, R(1, 2));
  EXPECT_EQ(p.b, R(3, 4));
  auto q = allpoly_params(R(5, 2));
  EXPECT_EQ(q.b, R(17, 8));
  auto r = allpoly_params(2);
  EXPECT_EQ(r.from_branch, "delta>=0");
  EXPECT_EQ(r.c, R(12, 5));  // 1/mu with mu = 5/12
  EXPECT_THROW(allpoly_params(R(1, 2)), InvalidArgument);
}

TEST(AllPoly, ParametersAlwaysPassTheFourInequalities) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(8, 120);
  for (int i = 0; i < 150; ++i) {
    Rational y(num(rng), 8);
    auto p = allpoly_params(y);
    for (const auto* args : {&p.into_check, &p.from_check}) {
      const auto& [a, b, m, eps] = *args;
      const Rational me = m + eps;
      EXPECT_LT(a + b / (m * 2 + eps), R(1)) << y;
      EXPECT_LE(R(0), a);
      EXPECT_LE(a, b);
      EXPECT_LT(b, me) << y;
      EXPECT_LT(me, a + b) << y;
      EXPECT_EQ(polydisk_knot_check(a, b, m, eps).status, VerdictStatus::Knotted) << y;
    }
  }
}

TEST(ProductThreshold, Examples) {
  EXPECT_EQ(product_threshold(ToricRegion::rectangle(1, 1))->rational(), R(2));
  EXPECT_EQ(product_threshold(ToricRegion::rectangle(2, 3))->rational(), R(5));
  EXPECT_FALSE(product_threshold(ToricRegion::triangle(1, 2)));
}

TEST(ProductVerdict, FactorsAboveThreshold) {
  auto cube = ToricRegion::rectangle(1, 1);
  EXPECT_EQ(product_verdict(cube, {R(21, 10), 3}).status, VerdictStatus::Knotted);
  EXPECT_EQ(product_verdict(cube, {R(3, 2)}).status, VerdictStatus::Inconclusive);
}

TEST(CaseEngines, ConvexInCubeInequalityOnRandomPolygons) {
  // Random convex polygons with vertices in the cube [0,c]^2 and one vertex past the diagonal x+y=c.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> d(1, 39);
  const Rational c(1);
  int checked = 0;
  while (checked < 100) {
    Rational x0(d(rng), 40), y0(d(rng), 40);
    if (x0 + y0 <= c) continue;
    auto reg = ToricRegion::convex_polygon({{0, 0}, {c, 0}, {x0, y0}, {0, c}});
    if (!reg.is_convex()) continue;
    EXPECT_GT(support_norm(reg, {1, 1}).rational(), support_norm(reg, {1, c / (x0 + y0)}).rational());
    ++checked;
  }
}
