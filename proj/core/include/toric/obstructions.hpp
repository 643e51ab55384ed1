#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/certificates.hpp"
#include "toric/domains.hpp"
#include "toric/rational.hpp"

namespace toric {

enum class VerdictStatus { Knotted, Inconclusive, NotApplicable };
std::string to_string(VerdictStatus s);

// For dilation verdicts the window is (delta_ell_upper, delta_u_lower): every
// alpha in it admits a knotted embedding X -> alpha X°. For polydisk-into-
// polydisk verdicts the window is the action interval (d, a+b) on which the
// rank-two persistence argument runs, and the delta fields are unset.
struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<std::pair<Quantity, Quantity>> window;
  std::optional<Quantity> delta_ell_upper;
  std::optional<Quantity> delta_u_lower;
  std::string case_label;
  std::vector<std::string> notes;
  std::vector<EmbeddingCertificate> certificates;
};

inline constexpr double kAnalyticMargin = 1e-9;

// Lower bound on delta_ell^u from the filtered-homology windows.
Quantity delta_u_lower(const ToricRegion& region);

// Which family of knotted dilations the region belongs to, if any:
// "convex-in-cube", "concave-sandwich", "lp-ball", "polydisk", or the
// generic "convex" / "concave".
std::string knot_case(const ToricRegion& region);

Verdict knotted_verdict(const ToricRegion& region, double margin = kAnalyticMargin);

// nullopt for p = 2 (round ball, not applicable).
std::optional<bool> lp_threshold_check(double p);

Verdict polydisk_knot_check(const Rational& a, const Rational& b, const Rational& m,
                            const Rational& eps);

struct PolydiskEmbeddingParams {
  Rational a, b;    // P(a,b) knotted in P(1,y)°
  Rational c, d;    // P(1,y) knotted in P(c,d)°
  // The arguments (a', b', m, eps) of the polydisk check that justify each route.
  std::array<Rational, 4> into_check;
  std::array<Rational, 4> from_check;
  std::string from_branch;  // "delta>=0" or "delta<0"
};

PolydiskEmbeddingParams allpoly_params(const Rational& y);

// Minimal R such that X x E(b_1, ...) is knotted for all b_i >= R; nullopt
// when the region is outside the supported families.
std::optional<Quantity> product_threshold(const ToricRegion& region);

Verdict product_verdict(const ToricRegion& region, const std::vector<Rational>& factors,
                        double margin = kAnalyticMargin);

}  // namespace toric
