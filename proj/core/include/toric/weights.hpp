#pragma once

#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Multiset of positive rationals, kept sorted in descending order.
class WeightSeq {
 public:
  WeightSeq() = default;
  // Throws InvalidArgument on a negative entry; zeros are dropped.
  explicit WeightSeq(std::vector<Rational> entries);

  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rational sum() const;
  Rational sum_of_squares() const;

  friend WeightSeq operator+(const WeightSeq& a, const WeightSeq& b);  // disjoint union
  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;

 private:
  std::vector<Rational> entries_;
};

struct WeightExpansion {
  Rational head;
  WeightSeq negatives;
};

// W(a,b): [a] + W(a, b-a) for a <= b, W(a,0) = [].
WeightSeq ellipsoid_weights(const Rational& a, const Rational& b);
// Weight sequence of a concave (or ellipsoid) toric quadrilateral T(a,b,x,y).
WeightSeq concave_weights(const Rational& a, const Rational& b, const Rational& x,
                          const Rational& y);
// Head and negative weights of a convex (or ellipsoid) toric quadrilateral.
WeightExpansion convex_expansion(const Rational& a, const Rational& b, const Rational& x,
                                 const Rational& y);

}  // namespace toric
