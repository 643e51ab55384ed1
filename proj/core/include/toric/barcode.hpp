#pragma once

#include <string>
#include <vector>

#include "toric/domains.hpp"
#include "toric/filtered.hpp"
#include "toric/rational.hpp"

namespace toric {

enum class DifferentialChoice { Default, Zero };

// Truncated generator list of a smoothed toric domain, as a filtered complex.
// On the open action window (window_lo, window_hi) the homology in `degree`
// has rank `window_rank`, and inclusions between window levels are isomorphisms.
struct BarcodeModel {
  std::string kind;  // "convex", "concave", "product"
  int dimension = 2; // complex dimension n
  int degree = 0;
  Quantity window_lo = Rational(0);
  Quantity window_hi = Rational(0);
  std::size_t window_rank = 0;
  FilteredComplex complex;
};

BarcodeModel barcode_convex(const ToricRegion& region, const Rational& delta,
                            DifferentialChoice choice = DifferentialChoice::Default);
BarcodeModel barcode_concave(const ToricRegion& region, const Rational& delta,
                             DifferentialChoice choice = DifferentialChoice::Default);
// X_Omega x E(factors); n = 2 + factors.size().
BarcodeModel barcode_product(const ToricRegion& region, const std::vector<Rational>& factors,
                             const Rational& delta,
                             DifferentialChoice choice = DifferentialChoice::Default);

// Number of good Reeb orbits of index `degree` and action <= L on the
// boundary of E(axes) for generic (rationally independent) axes. The k-fold
// cover of the i-th orbit has action k*axes[i] and index
// n - 1 + 2 * sum_j floor(k * axes[i] / axes[j]).
std::size_t ellipsoid_orbit_count(const std::vector<double>& axes, int degree, double L);

// The same orbits as a filtered complex with zero differential (all indices
// share a parity), truncated at action <= max_action.
FilteredComplex ellipsoid_complex(const std::vector<double>& axes, double max_action);

}  // namespace toric
