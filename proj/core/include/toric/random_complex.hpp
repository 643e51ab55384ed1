#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/filtered.hpp"

namespace toric {

struct RandomComplexOptions {
  std::size_t max_generators = 15;
  int min_degree = -2;
  int max_degree = 6;
  int degree_span = 3;  // each case draws its degrees from a random window this wide
  int level_denominator = 4;     // levels are j / level_denominator
  int max_level_numerator = 16;  // with 1 <= j <= max_level_numerator
  double pair_probability = 0.7;
  int coefficient_range = 2;     // conjugating entries in [-range, range]
};

// Random complex with d^2 = 0 and strictly decreasing filtration: a matching
// d0 (x -> y with level(y) < level(x)) conjugated by a random
// filtration-preserving unitriangular change of basis in each degree.
FilteredComplex random_filtered_complex(std::uint64_t seed, std::size_t case_index,
                                        const RandomComplexOptions& options = {});

struct SelftestSummary {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t invariant_failures = 0;
  std::vector<std::string> failures;  // first few, human-readable
  bool pass() const { return mismatches == 0 && invariant_failures == 0; }
};

// For every case, compares inclusion_image_rank on C against the derived
// complex for all degrees and all step pairs s <= t (t = infinity included).
// Cases are partitioned across `workers` threads; results do not depend on it.
SelftestSummary filtered_selftest(std::size_t cases, std::uint64_t seed,
                                  const RandomComplexOptions& options = {}, unsigned workers = 1);

}  // namespace toric
