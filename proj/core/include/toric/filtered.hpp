#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/rational.hpp"

namespace toric {

inline constexpr double kInfiniteLevel = std::numeric_limits<double>::infinity();

// Finite Z-graded chain complex over Q whose differential strictly lowers
// the real filtration level and drops degree by one.
class FilteredComplex {
 public:
  struct Generator {
    std::string name;
    int degree;
    double level;
  };
  // Sparse column: (generator index, coefficient), indices unique.
  using Chain = std::vector<std::pair<std::size_t, Rational>>;

  FilteredComplex() = default;
  // Validates degrees, strict filtration decrease, and d^2 = 0.
  FilteredComplex(std::vector<Generator> generators, std::vector<Chain> boundary);

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  const Chain& boundary(std::size_t i) const { return boundary_[i]; }

  std::vector<int> degrees() const;          // sorted, distinct
  std::vector<double> distinct_levels() const;  // sorted, distinct
  // Indices of generators of degree k with level <= L, in index order.
  std::vector<std::size_t> generators_in(int k, double L = kInfiniteLevel) const;

 private:
  std::vector<Generator> gens_;
  std::vector<Chain> boundary_;
};

// rank H_k of the subcomplex of filtration <= L.
std::size_t homology_rank(const FilteredComplex& c, int k, double L);
// rank of H_k(C^{<=s}) -> H_k(C^{<=t}) induced by inclusion; t may be infinite.
std::size_t inclusion_image_rank(const FilteredComplex& c, int k, double s, double t);

// Dimensions of the spectral-sequence subspaces at one (step, degree).
struct PageRecord {
  int step = 0;
  int degree = 0;
  std::size_t e1 = 0;
  std::vector<std::size_t> z;  // dim Z^r for r = 1..step
  std::vector<std::size_t> b;  // dim B^r for r = 1..step
  std::vector<std::size_t> h;  // dim H^r
  std::vector<std::size_t> m;  // dim M^r
};

// Complex on the E^1 page of the step filtration. Generators carry their
// step index (1..r) as level; `step_levels[p-1]` is the original level of step p.
struct DerivedComplex {
  FilteredComplex complex;
  std::vector<double> step_levels;
  std::vector<PageRecord> pages;

  int steps() const { return static_cast<int>(step_levels.size()); }
  // Step index whose level is the largest one <= L (0 if none).
  int step_of(double L) const;
};

DerivedComplex derived_complex(const FilteredComplex& c);

// Checks that delta strictly lowers the step and squares to zero.
bool derived_invariants_hold(const DerivedComplex& d);

}  // namespace toric
