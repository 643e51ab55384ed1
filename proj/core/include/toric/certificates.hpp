#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cremona.hpp"
#include "toric/domains.hpp"
#include "toric/rational.hpp"

namespace toric {

struct RouteStep {
  std::string description;
  std::optional<WeightSeq> weights;  // packing instance, when the step is a packing check
  std::optional<Rational> t;
  std::optional<PackingResult> packing;
};

struct EmbeddingCertificate {
  std::string name;       // which construction, e.g. "cvxaxy"
  std::string source;     // e.g. "E(1,2)"
  std::string target;     // e.g. "alpha*T(1,1,1,1) for all alpha > 1"
  std::vector<RouteStep> route;
  std::vector<std::string> failed_hypotheses;
  bool verified = false;
};

// E(a, x+y) -> alpha T(a,b,x,y) for x <= a, y <= b, a <= b <= x+y.
EmbeddingCertificate check_cvxaxy(const Rational& a, const Rational& b, const Rational& x,
                                  const Rational& y);
// T(a,b,x,y) -> alpha E(b, x+y) for x+y <= a <= b.
EmbeddingCertificate check_ccvaxy(const Rational& a, const Rational& b, const Rational& x,
                                  const Rational& y);
// E(1, 2m+eps) -> alpha P(1, m+eps); throws InvalidArgument unless m >= 1, 0 <= eps < 1.
EmbeddingCertificate check_longembed(const Rational& m, const Rational& eps);
// E((a+b)/3, 2a+y) -> alpha T(a,b,a,y) for a <= y <= b <= 2a.
EmbeddingCertificate check_step2(const Rational& a, const Rational& y, const Rational& b);

struct DeltaEllBound {
  Quantity bound;
  std::string route;  // "case-a", "case-b", "case-c", "inclusion-only", "lp-closed-form"
  std::string witness;
  std::optional<EmbeddingCertificate> certificate;
  std::vector<std::string> notes;
};

// Least upper bound on delta_ell among the applicable constructions.
DeltaEllBound delta_ell_upper(const ToricRegion& region);

}  // namespace toric
