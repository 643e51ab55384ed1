#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "toric/rational.hpp"
#include "toric/weights.hpp"

namespace toric {

struct CremonaStep {
  std::array<std::size_t, 3> indices;  // positions moved, in the vector before the move
  Rational t;                          // after the move
  std::vector<Rational> weights;       // after the move, positional
  bool legal_hypothesis;               // t >= a_i + a_j for all pairs, before the move
};

// (t; a_1, ..., a_m) with the moves applied so far.
struct PackingVector {
  Rational t;
  std::vector<Rational> weights;
  std::vector<CremonaStep> trace;

  Rational linear_invariant() const;     // 3t - sum a_i
  Rational quadratic_invariant() const;  // t^2 - sum a_i^2
};

// Sorts the weights descending, pads to three entries, and replaces
// (t; a1, a2, a3, ...) by (2t - a1 - a2 - a3; t - a2 - a3, t - a1 - a3, t - a1 - a2, ...).
PackingVector cremona_move(const PackingVector& v);

struct PackingResult {
  bool packs = false;
  std::string reason;
  PackingVector reduction;  // initial vector plus the full trace
  PackingVector final_state;
  static constexpr const char* criterion = "cremona-reduction";
};

inline constexpr std::size_t kDefaultIterationCap = 1'000'000;

// Decides [a_1, ..., a_m] <= [t] (closed packing relation) by Cremona reduction.
PackingResult packs(const WeightSeq& weights, const Rational& t,
                    std::size_t iteration_cap = kDefaultIterationCap);

struct PackingBracket {
  Rational no;   // largest tested t that does not pack
  Rational yes;  // smallest tested t that packs
};

// Bisection for the least t with packs(weights, t) = Yes, to within `tolerance`.
PackingBracket solve_packing(const WeightSeq& weights, const Rational& tolerance);

}  // namespace toric
