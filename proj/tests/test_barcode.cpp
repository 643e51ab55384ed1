#include <gtest/gtest.h>

#include <cmath>

#include "toric/barcode.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

ToricRegion min_sum_region() {
  // {min(2x + y, x + 2y) <= 1}
  return ToricRegion::concave_polygon({{1, 0}, {R(1, 3), R(1, 3)}, {0, 1}});
}

void expect_window_isomorphisms(const BarcodeModel& m, int steps = 8) {
  const double lo = m.window_lo.value(), hi = m.window_hi.value();
  for (int i = 0; i <= steps; ++i) {
    const double L1 = lo + (hi - lo) * (i + 0.5) / (steps + 1);
    EXPECT_EQ(homology_rank(m.complex, m.degree, L1), m.window_rank) << L1;
    for (int j = i; j <= steps; ++j) {
      const double L2 = lo + (hi - lo) * (j + 0.5) / (steps + 1);
      EXPECT_EQ(inclusion_image_rank(m.complex, m.degree, L1, L2), m.window_rank) << L1 << " " << L2;
    }
  }
}

}  // namespace

TEST(Barcode, ConvexCubeWindow) {
  for (auto choice : {DifferentialChoice::Default, DifferentialChoice::Zero}) {
    auto m = barcode_convex(ToricRegion::rectangle(1, 1), R(1, 10), choice);
    EXPECT_EQ(m.degree, 3);
    EXPECT_EQ(m.window_rank, 2u);
    EXPECT_EQ(m.window_lo.rational(), R(11, 10));
    EXPECT_EQ(m.window_hi.rational(), R(19, 10));
    expect_window_isomorphisms(m);
  }
}

TEST(Barcode, ConvexDifferentialOnlyMattersAboveWindow) {
  auto d = barcode_convex(ToricRegion::rectangle(1, 1), R(1, 10), DifferentialChoice::Default);
  auto z = barcode_convex(ToricRegion::rectangle(1, 1), R(1, 10), DifferentialChoice::Zero);
  EXPECT_EQ(homology_rank(d.complex, 3, 3.0), 1u);
  EXPECT_EQ(homology_rank(z.complex, 3, 3.0), 2u);
}

TEST(Barcode, PolydiskWindowAboveLongSide) {
  auto m = barcode_convex(ToricRegion::rectangle(1, R(3, 2)), R(1, 20));
  EXPECT_EQ(m.window_lo.rational(), R(3, 2) + R(1, 20));
  EXPECT_EQ(m.window_hi.rational(), R(5, 2) - R(1, 20));
  expect_window_isomorphisms(m);
}

TEST(Barcode, NoWindowWhenDeltaTooLarge) {
  EXPECT_THROW(barcode_convex(ToricRegion::rectangle(1, 1), R(1, 2)), NoWindow);
  EXPECT_THROW(barcode_concave(min_sum_region(), R(1, 6)), NoWindow);
  EXPECT_THROW(barcode_convex(min_sum_region(), R(1, 10)), WrongKind);
}

TEST(Barcode, ConcaveMinSumWindow) {
  for (auto choice : {DifferentialChoice::Default, DifferentialChoice::Zero}) {
    auto m = barcode_concave(min_sum_region(), R(1, 100), choice);
    EXPECT_EQ(m.degree, 4);
    EXPECT_EQ(m.window_rank, 1u);
    EXPECT_EQ(m.window_lo.rational(), R(2, 3) + R(1, 100));
    EXPECT_EQ(m.window_hi.rational(), R(1) - R(1, 100));
    expect_window_isomorphisms(m);
    EXPECT_EQ(homology_rank(m.complex, 3, 0.9), 1u);
  }
}

TEST(Barcode, ProductWithLargeEllipsoidFactor) {
  auto m = barcode_product(ToricRegion::rectangle(1, 1), {R(21, 10)}, R(1, 20));
  EXPECT_EQ(m.dimension, 3);
  EXPECT_EQ(m.degree, 4);
  EXPECT_EQ(m.window_rank, 2u);
  expect_window_isomorphisms(m);
  EXPECT_THROW(barcode_product(ToricRegion::rectangle(1, 1), {R(2)}, R(1, 20)), InvalidArgument);
}

TEST(Barcode, GenericEllipsoidHasOneGeneratorPerIndex) {
  const std::vector<double> axes{1.0, std::sqrt(2.0)};
  for (int deg = 0; deg <= 40; ++deg)
    EXPECT_EQ(ellipsoid_orbit_count(axes, deg, 1000.0), deg >= 3 && deg % 2 == 1 ? 1u : 0u) << deg;
  EXPECT_EQ(ellipsoid_orbit_count(axes, 3, 0.5), 0u);
}

TEST(Barcode, ProductBeatsEllipsoidModelCount) {
  // Product model has rank 2 in degree n+1 on its window; any generic
  // ellipsoid in the same dimension has at most one generator there.
  auto m = barcode_product(ToricRegion::rectangle(1, 1), {R(21, 10), R(5, 2)}, R(1, 20));
  const double L = (m.window_lo.value() + m.window_hi.value()) / 2;
  EXPECT_EQ(homology_rank(m.complex, m.degree, L), 2u);
  for (const auto& axes : {std::vector<double>{1.0, std::sqrt(2.0), std::sqrt(5.0), std::sqrt(7.0)},
                           std::vector<double>{0.7, std::sqrt(3.0), M_PI, std::exp(1.0)}}) {
    for (double level = 0.5; level < 40; level += 0.5)
      EXPECT_LE(ellipsoid_orbit_count(axes, m.degree, level), 1u);
    auto e = ellipsoid_complex(axes, 40);
    EXPECT_LE(homology_rank(e, m.degree, 40), 1u);
  }
}
