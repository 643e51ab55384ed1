#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/domains.hpp"
#include "toric/errors.hpp"
#include "toric/weights.hpp"

using namespace toric;

namespace {

std::vector<Rational> rs(std::initializer_list<Rational> xs) { return xs; }

std::vector<std::pair<mpq_class, mpq_class>> quad_polygon(const Rational& a, const Rational& b,
                                                          const Rational& x, const Rational& y) {
  return {{0, 0}, {a.mpq(), 0}, {x.mpq(), y.mpq()}, {0, b.mpq()}};
}

}  // namespace

TEST(Weights, WorkedConcaveExample) {
  EXPECT_EQ(concave_weights(4, 5, 1, 2).entries(), rs({3, 1, 1, 1, 1}));
}

TEST(Weights, EllipsoidWeightsMatchSquareTiling) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(1, 200);
  for (int i = 0; i < 200; ++i) {
    Rational a(d(rng), d(rng)), b(d(rng), d(rng));
    auto w = ellipsoid_weights(a, b);
    auto o = oracle::square_tiling(a.mpq(), b.mpq());
    ASSERT_EQ(w.size(), o.size());
    for (std::size_t k = 0; k < o.size(); ++k) EXPECT_EQ(w.entries()[k].mpq(), o[k]);
  }
}

TEST(Weights, EllipsoidHandValues) {
  EXPECT_EQ(ellipsoid_weights(1, 2).entries(), rs({1, 1}));
  EXPECT_EQ(ellipsoid_weights(2, 3).entries(), rs({2, 1, 1}));
  EXPECT_EQ(ellipsoid_weights(1, Rational(9, 2)).entries(), rs({1, 1, 1, 1, Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(ellipsoid_weights(0, 3).empty());
}

TEST(Weights, SequencesAreSortedAndRejectNegatives) {
  WeightSeq w({1, 3, 0, 2});
  EXPECT_EQ(w.entries(), rs({3, 2, 1}));
  EXPECT_THROW(WeightSeq({1, -1}), InvalidArgument);
  EXPECT_EQ((WeightSeq({1}) + WeightSeq({2})).entries(), rs({2, 1}));
}

TEST(Weights, ConcaveQuadraticIdentityOnRandomQuadrilaterals) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(1, 60);
  int checked = 0;
  while (checked < 100) {
    Rational a(d(rng), 7), b(d(rng), 7), x(d(rng), 11), y(d(rng), 13);
    if (classify_quadrilateral(a, b, x, y) != QuadKind::Concave) continue;
    auto w = concave_weights(a, b, x, y);
    EXPECT_EQ(w.sum_of_squares(), a * y + b * x);
    for (const auto& e : w.entries()) EXPECT_GT(e, Rational(0));
    ++checked;
  }
}

TEST(Weights, ConvexQuadraticIdentityOnRandomQuadrilaterals) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(1, 60);
  int checked = 0;
  while (checked < 100) {
    Rational a(d(rng), 7), b(d(rng), 7), x(d(rng), 11), y(d(rng), 13);
    if (classify_quadrilateral(a, b, x, y) != QuadKind::Convex) continue;
    auto e = convex_expansion(a, b, x, y);
    EXPECT_EQ((e.head * e.head - e.negatives.sum_of_squares()).mpq(),
              oracle::twice_area(quad_polygon(a, b, x, y)));
    ++checked;
  }
}

TEST(Weights, WrongKindIsRejected) {
  EXPECT_THROW(convex_expansion(4, 5, 1, 2), WrongKind);
  EXPECT_THROW(concave_weights(1, 1, 1, 1), WrongKind);
}

TEST(Weights, EllipsoidQuadrilateralReducesToEllipsoidWeights) {
  EXPECT_EQ(concave_weights(2, 3, 0, 3).entries(), ellipsoid_weights(2, 3).entries());
  auto e = convex_expansion(2, 3, 0, 3);
  EXPECT_EQ(e.head * e.head - e.negatives.sum_of_squares(), Rational(6));
}
