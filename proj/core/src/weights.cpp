#include "toric/weights.hpp"

#include <algorithm>
#include <functional>

#include "toric/domains.hpp"
#include "toric/errors.hpp"

namespace toric {

WeightSeq::WeightSeq(std::vector<Rational> entries) {
  for (auto& e : entries) {
    if (e.sign() < 0) throw InvalidArgument("weights must be nonnegative, got " + e.str());
    if (e.sign() > 0) entries_.push_back(std::move(e));
  }
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

Rational WeightSeq::sum() const {
  Rational s;
  for (const auto& e : entries_) s += e;
  return s;
}

Rational WeightSeq::sum_of_squares() const {
  Rational s;
  for (const auto& e : entries_) s += e * e;
  return s;
}

WeightSeq operator+(const WeightSeq& a, const WeightSeq& b) {
  std::vector<Rational> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return WeightSeq(std::move(all));
}

WeightSeq ellipsoid_weights(const Rational& a, const Rational& b) {
  if (a.sign() < 0 || b.sign() < 0) throw InvalidArgument("ellipsoid weights need a, b >= 0");
  std::vector<Rational> out;
  Rational small = std::min(a, b), large = std::max(a, b);
  // Euclid on rationals: floor(large/small) copies of small, then recurse on the remainder.
  while (small.sign() > 0) {
    mpz_class k = (large / small).floor();
    for (mpz_class i = 0; i < k; ++i) out.push_back(small);
    Rational rem = large - small * Rational(k);
    large = small;
    small = rem;
  }
  return WeightSeq(std::move(out));
}

WeightSeq concave_weights(const Rational& a, const Rational& b, const Rational& x,
                          const Rational& y) {
  QuadKind kind = classify_quadrilateral(a, b, x, y);
  if (kind == QuadKind::Ellipsoid) return ellipsoid_weights(a, b);
  if (kind != QuadKind::Concave)
    throw WrongKind("concave_weights: T(" + a.str() + "," + b.str() + "," + x.str() + "," +
                    y.str() + ") is " + to_string(kind));
  return WeightSeq({x + y}) + ellipsoid_weights(a - x - y, y) + ellipsoid_weights(b - x - y, x);
}

WeightExpansion convex_expansion(const Rational& a, const Rational& b, const Rational& x,
                                 const Rational& y) {
  QuadKind kind = classify_quadrilateral(a, b, x, y);
  if (kind == QuadKind::Ellipsoid) {
    Rational lo = std::min(a, b), hi = std::max(a, b);
    return {hi, ellipsoid_weights(hi, hi - lo)};
  }
  if (kind != QuadKind::Convex)
    throw WrongKind("convex_expansion: T(" + a.str() + "," + b.str() + "," + x.str() + "," +
                    y.str() + ") is " + to_string(kind));
  return {x + y, ellipsoid_weights(x + y - a, y) + ellipsoid_weights(x + y - b, x)};
}

}  // namespace toric
