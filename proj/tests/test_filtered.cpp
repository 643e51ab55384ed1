#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/filtered.hpp"
#include "toric/random_complex.hpp"

using namespace toric;
using Gen = FilteredComplex::Generator;

namespace {

// x (degree 1, level 2) with boundary y (degree 0, level 1).
FilteredComplex interval() {
  return FilteredComplex({{"y", 0, 1.0}, {"x", 1, 2.0}}, {{}, {{0, Rational(1)}}});
}

}  // namespace

TEST(Filtered, SingleIntervalRanks) {
  auto c = interval();
  EXPECT_EQ(homology_rank(c, 0, 0.5), 0u);
  EXPECT_EQ(homology_rank(c, 0, 1.5), 1u);
  EXPECT_EQ(homology_rank(c, 0, 2.0), 0u);
  EXPECT_EQ(homology_rank(c, 1, 5.0), 0u);
  EXPECT_EQ(inclusion_image_rank(c, 0, 1.0, 1.5), 1u);
  EXPECT_EQ(inclusion_image_rank(c, 0, 1.0, 2.0), 0u);
  EXPECT_EQ(inclusion_image_rank(c, 0, 1.0, kInfiniteLevel), 0u);
  EXPECT_THROW(inclusion_image_rank(c, 0, 2.0, 1.0), InvalidArgument);
}

TEST(Filtered, ConstructorValidates) {
  // Boundary must lower the level strictly.
  EXPECT_THROW(FilteredComplex({{"y", 0, 2.0}, {"x", 1, 2.0}}, {{}, {{0, Rational(1)}}}),
               InvalidArgument);
  // Boundary must drop degree by one.
  EXPECT_THROW(FilteredComplex({{"y", 1, 1.0}, {"x", 1, 2.0}}, {{}, {{0, Rational(1)}}}),
               InvalidArgument);
  // d^2 = 0.
  EXPECT_THROW(FilteredComplex({{"z", 0, 1.0}, {"y", 1, 2.0}, {"x", 2, 3.0}},
                               {{}, {{0, Rational(1)}}, {{1, Rational(1)}}}),
               InvalidArgument);
}

TEST(Filtered, DirectRanksMatchPersistenceOracle) {
  std::mt19937_64 rng(41);
  for (std::size_t i = 0; i < 200; ++i) {
    auto c = random_filtered_complex(41, i);
    auto levels = c.distinct_levels();
    levels.push_back(kInfiniteLevel);
    for (int k : c.degrees()) {
      for (std::size_t a = 0; a + 1 < levels.size(); ++a) {
        for (std::size_t b = a; b < levels.size(); ++b) {
          ASSERT_EQ(inclusion_image_rank(c, k, levels[a], levels[b]),
                    oracle::persistence_image_rank(c, k, levels[a], levels[b]))
              << "case " << i << " k=" << k << " s=" << levels[a] << " t=" << levels[b];
        }
      }
    }
  }
}

TEST(Filtered, RandomComplexesAreDeterministicAndBounded) {
  RandomComplexOptions opt;
  for (std::size_t i = 0; i < 50; ++i) {
    auto a = random_filtered_complex(5, i, opt), b = random_filtered_complex(5, i, opt);
    ASSERT_EQ(a.size(), b.size());
    EXPECT_LE(a.size(), opt.max_generators);
    for (std::size_t g = 0; g < a.size(); ++g) {
      EXPECT_EQ(a.generator(g).level, b.generator(g).level);
      EXPECT_EQ(a.boundary(g), b.boundary(g));
    }
  }
}

TEST(Filtered, RandomComplexesHaveNontrivialDifferentials) {
  std::size_t with_boundary = 0, multi_term = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto c = random_filtered_complex(9, i);
    for (std::size_t g = 0; g < c.size(); ++g) {
      if (!c.boundary(g).empty()) ++with_boundary;
      if (c.boundary(g).size() > 1) ++multi_term;
    }
  }
  EXPECT_GT(with_boundary, 200u);
  EXPECT_GT(multi_term, 50u);
}

TEST(Derived, StepsAndGeneratorsOfInterval) {
  auto d = derived_complex(interval());
  EXPECT_EQ(d.steps(), 2);
  EXPECT_EQ(d.step_levels, std::vector<double>({1.0, 2.0}));
  EXPECT_EQ(d.complex.size(), 2u);
  EXPECT_EQ(d.step_of(1.5), 1);
  EXPECT_EQ(d.step_of(0.5), 0);
  EXPECT_TRUE(derived_invariants_hold(d));
  EXPECT_EQ(inclusion_image_rank(d.complex, 0, 1, 1), 1u);
  EXPECT_EQ(inclusion_image_rank(d.complex, 0, 1, 2), 0u);
}

TEST(Derived, PageDimensionsAreConsistent) {
  for (std::size_t i = 0; i < 100; ++i) {
    auto d = derived_complex(random_filtered_complex(43, i));
    for (const auto& p : d.pages) {
      ASSERT_EQ(p.z.size(), p.b.size());
      ASSERT_EQ(p.z.size(), p.h.size());
      for (std::size_t r = 0; r < p.z.size(); ++r) {
        EXPECT_LE(p.z[r], p.e1);
        EXPECT_LE(p.b[r], p.z[r]);
        EXPECT_EQ(p.h[r], p.z[r] - p.b[r]);
        if (r + 1 < p.z.size()) {
          EXPECT_GE(p.z[r], p.z[r + 1]);
          EXPECT_LE(p.b[r], p.b[r + 1]);
        }
      }
    }
  }
}

TEST(Derived, SelftestHasNoMismatches) {
  auto s = filtered_selftest(200, 7);
  EXPECT_TRUE(s.pass());
  EXPECT_EQ(s.cases, 200u);
  EXPECT_EQ(s.mismatches, 0u);
  EXPECT_GT(s.comparisons, 10000u);
}

TEST(Derived, SelftestIndependentOfWorkerCount) {
  auto a = filtered_selftest(60, 11, {}, 1), b = filtered_selftest(60, 11, {}, 4);
  EXPECT_EQ(a.comparisons, b.comparisons);
  EXPECT_EQ(a.mismatches, b.mismatches);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(Derived, DerivedRanksMatchOracleOnOriginal) {
  for (std::size_t i = 0; i < 100; ++i) {
    auto c = random_filtered_complex(47, i);
    auto d = derived_complex(c);
    const int R = d.steps();
    for (int k : c.degrees())
      for (int s = 1; s <= R; ++s)
        for (int t = s; t <= R + 1; ++t) {
          const double ct = t > R ? kInfiniteLevel : d.step_levels[t - 1];
          ASSERT_EQ(inclusion_image_rank(d.complex, k, s, t),
                    oracle::persistence_image_rank(c, k, d.step_levels[s - 1], ct));
        }
  }
}
