#include "toric/cremona.hpp"

#include <algorithm>
#include <functional>

#include "toric/errors.hpp"

namespace toric {

namespace {

void normalize(std::vector<Rational>& w) {
  std::stable_sort(w.begin(), w.end(), std::greater<>());
  while (w.size() < 3) w.push_back(0);
}

}  // namespace

Rational PackingVector::linear_invariant() const {
  Rational s = t * 3;
  for (const auto& a : weights) s -= a;
  return s;
}

Rational PackingVector::quadratic_invariant() const {
  Rational s = t * t;
  for (const auto& a : weights) s -= a * a;
  return s;
}

PackingVector cremona_move(const PackingVector& v) {
  PackingVector out = v;
  normalize(out.weights);
  auto& w = out.weights;
  const Rational a1 = w[0], a2 = w[1], a3 = w[2];
  const Rational t = out.t;
  bool legal = t >= a1 + a2 && t >= a1 + a3 && t >= a2 + a3;
  w[0] = t - a2 - a3;
  w[1] = t - a1 - a3;
  w[2] = t - a1 - a2;
  out.t = t * 2 - a1 - a2 - a3;
  out.trace.push_back({{0, 1, 2}, out.t, w, legal});
  return out;
}

PackingResult packs(const WeightSeq& weights, const Rational& t, std::size_t iteration_cap) {
  if (t.sign() < 0) throw InvalidArgument("packs: t must be >= 0");
  PackingResult res;
  PackingVector v{t, weights.entries(), {}};
  res.reduction = v;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > iteration_cap)
      throw NonTermination("Cremona reduction exceeded " + std::to_string(iteration_cap) +
                           " moves");
    auto& w = v.weights;
    if (std::any_of(w.begin(), w.end(), [](const Rational& a) { return a.sign() < 0; })) {
      res.packs = false;
      res.reason = "negative entry";
      break;
    }
    std::erase_if(w, [](const Rational& a) { return a.is_zero(); });
    normalize(w);
    if (v.t < w[0]) {
      res.packs = false;
      res.reason = "t below largest entry";
      break;
    }
    if (v.t - w[0] - w[1] - w[2] >= 0) {
      // Reduced with nonnegative entries: in the closed cone iff the square is nonnegative.
      Rational sq = v.t * v.t;
      for (const auto& a : w) sq -= a * a;
      res.packs = sq.sign() >= 0;
      res.reason = res.packs ? "reduced" : "reduced with negative square";
      break;
    }
    v = cremona_move(v);
    res.reduction.trace.push_back(v.trace.back());
  }
  v.trace.clear();
  res.final_state = std::move(v);
  return res;
}

PackingBracket solve_packing(const WeightSeq& weights, const Rational& tolerance) {
  if (tolerance.sign() <= 0) throw InvalidArgument("tolerance must be > 0");
  if (weights.empty()) return {0, 0};
  Rational no = 0, yes = weights.sum();
  while (!packs(weights, yes).packs) yes *= 2;
  if (packs(weights, no).packs) return {no, no};
  while (yes - no > tolerance) {
    Rational mid = (no + yes) / 2;
    (packs(weights, mid).packs ? yes : no) = mid;
  }
  return {no, yes};
}

}  // namespace toric
