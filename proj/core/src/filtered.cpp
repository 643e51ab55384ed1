#include "toric/filtered.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "toric/errors.hpp"

namespace toric {

using linalg::Matrix;
using linalg::Span;
using linalg::Vec;

FilteredComplex::FilteredComplex(std::vector<Generator> generators, std::vector<Chain> boundary)
    : gens_(std::move(generators)), boundary_(std::move(boundary)) {
  if (boundary_.size() != gens_.size())
    throw InvalidArgument("boundary must have one column per generator");
  for (const auto& g : gens_)
    if (!std::isfinite(g.level)) throw InvalidArgument("generator levels must be finite");
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::set<std::size_t> seen;
    std::erase_if(boundary_[j], [](const auto& e) { return e.second.is_zero(); });
    for (const auto& [i, coeff] : boundary_[j]) {
      if (i >= gens_.size()) throw InvalidArgument("boundary refers to unknown generator");
      if (!seen.insert(i).second) throw InvalidArgument("repeated index in boundary column");
      if (gens_[i].degree != gens_[j].degree - 1)
        throw InvalidArgument("differential must lower degree by one (" + gens_[j].name + ")");
      if (!(gens_[i].level < gens_[j].level))
        throw InvalidArgument("differential must strictly lower filtration (" + gens_[j].name +
                              " -> " + gens_[i].name + ")");
    }
  }
  // d^2 = 0
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    std::unordered_map<std::size_t, Rational> acc;
    for (const auto& [i, c] : boundary_[j])
      for (const auto& [l, c2] : boundary_[i]) acc[l] += c * c2;
    for (const auto& [l, v] : acc)
      if (!v.is_zero()) throw InvalidArgument("differential does not square to zero");
  }
}

std::vector<int> FilteredComplex::degrees() const {
  std::set<int> s;
  for (const auto& g : gens_) s.insert(g.degree);
  return {s.begin(), s.end()};
}

std::vector<double> FilteredComplex::distinct_levels() const {
  std::set<double> s;
  for (const auto& g : gens_) s.insert(g.level);
  return {s.begin(), s.end()};
}

std::vector<std::size_t> FilteredComplex::generators_in(int k, double L) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].degree == k && gens_[i].level <= L) out.push_back(i);
  return out;
}

namespace {

// Coordinates of the generators of one degree.
struct Coords {
  std::vector<std::size_t> gens;
  std::unordered_map<std::size_t, std::size_t> local;

  Coords(const FilteredComplex& c, int k) : gens(c.generators_in(k)) {
    for (std::size_t i = 0; i < gens.size(); ++i) local[gens[i]] = i;
  }
  Vec chain(const FilteredComplex::Chain& ch) const {
    Vec v(gens.size());
    for (const auto& [i, coeff] : ch) v[local.at(i)] = coeff;
    return v;
  }
};

}  // namespace

std::size_t inclusion_image_rank(const FilteredComplex& c, int k, double s, double t) {
  if (s > t) throw InvalidArgument("inclusion_image_rank requires s <= t");
  Coords ck(c, k), cprev(c, k - 1);
  auto cols = c.generators_in(k, s);
  // Cycles of degree k at level <= s.
  Matrix m(cprev.gens.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, coeff] : c.boundary(cols[j])) m(cprev.local.at(i), j) = coeff;
  Span boundaries(ck.gens.size());
  for (auto g : c.generators_in(k + 1, t)) boundaries.insert(ck.chain(c.boundary(g)));
  const std::size_t b = boundaries.dim();
  Span sum = boundaries;
  for (const auto& z : linalg::nullspace(m)) {
    Vec full(ck.gens.size());
    for (std::size_t j = 0; j < cols.size(); ++j) full[ck.local.at(cols[j])] = z[j];
    sum.insert(full);
  }
  return sum.dim() - b;
}

std::size_t homology_rank(const FilteredComplex& c, int k, double L) {
  return inclusion_image_rank(c, k, L, L);
}

int DerivedComplex::step_of(double L) const {
  auto it = std::upper_bound(step_levels.begin(), step_levels.end(), L);
  return static_cast<int>(it - step_levels.begin());
}

bool derived_invariants_hold(const DerivedComplex& d) {
  const auto& c = d.complex;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (const auto& [i, coeff] : c.boundary(j)) {
      if (!(c.generator(i).level < c.generator(j).level)) return false;
      if (c.generator(i).degree != c.generator(j).degree - 1) return false;
    }
    std::unordered_map<std::size_t, Rational> acc;
    for (const auto& [i, a] : c.boundary(j))
      for (const auto& [l, b] : c.boundary(i)) acc[l] += a * b;
    for (const auto& [l, v] : acc)
      if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace toric
