#include "toric/obstructions.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

namespace {

Direction dir(long a, long b) { return Direction(a, b); }

bool convex_in_cube(const ToricRegion& r) {
  if (!r.is_polygonal() || !r.is_convex() || r.is_ellipsoid()) return false;
  Rational c = r.x_intercept().rational();
  if (r.y_intercept().rational() != c) return false;
  bool strict = false;
  for (const auto& v : r.vertices()) {
    if (v.x > c || v.y > c) return false;
    if (v.x + v.y > c) strict = true;
  }
  return strict;
}

bool concave_sandwich(const ToricRegion& r) {
  if (r.kind() != RegionKind::ConcavePolygon) return false;
  Rational c = r.x_intercept().rational();
  if (r.y_intercept().rational() != c) return false;
  auto inner = ToricRegion::concave_polygon({{c, 0}, {c / 3, c / 3}, {0, c}});
  auto outer = ToricRegion::triangle(c, c);
  return contains_region(r, inner) && contains_region(outer, r) && !contains_region(r, outer);
}

std::optional<std::pair<Rational, Rational>> oriented_rectangle(const ToricRegion& r) {
  if (r.kind() != RegionKind::Rectangle) return std::nullopt;
  Rational a = r.x_intercept().rational(), b = r.y_intercept().rational();
  if (a > b) std::swap(a, b);
  return std::pair{a, b};
}

void compare_into(Verdict& v, const Quantity& upper, const Quantity& lower, double margin) {
  v.delta_ell_upper = upper;
  v.delta_u_lower = lower;
  switch (compare(upper, lower, margin)) {
    case Comparison::Less:
      v.status = VerdictStatus::Knotted;
      v.window = std::pair{upper, lower};
      break;
    case Comparison::Equal:
      v.status = VerdictStatus::Inconclusive;
      v.notes.push_back("upper and lower bounds coincide; strict inequality required");
      break;
    case Comparison::Greater:
      v.status = VerdictStatus::Inconclusive;
      v.notes.push_back("upper bound exceeds lower bound");
      break;
    case Comparison::Indeterminate:
      v.status = VerdictStatus::Inconclusive;
      v.notes.push_back("bounds agree within the numeric margin");
      break;
  }
}

}  // namespace

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Knotted: return "Knotted";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    case VerdictStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

Quantity delta_u_lower(const ToricRegion& region) {
  if (region.is_ellipsoid()) return Rational(1);
  if (region.is_convex()) {
    Quantity num = support_norm(region, dir(1, 1));
    Quantity den = support_norm(region, dir(1, 0));
    Quantity other = support_norm(region, dir(0, 1));
    if (other.value() > den.value()) den = other;
    return num / den;
  }
  Quantity num = min(cosupport(region, dir(2, 1)), cosupport(region, dir(1, 2)));
  return num / cosupport(region, dir(1, 1));
}

std::string knot_case(const ToricRegion& region) {
  if (region.kind() == RegionKind::LpBall) return "lp-ball";
  if (auto ab = oriented_rectangle(region); ab && ab->second < ab->first * 2) return "polydisk";
  if (convex_in_cube(region)) return "convex-in-cube";
  if (concave_sandwich(region)) return "concave-sandwich";
  return region.is_convex() ? "convex" : "concave";
}

Verdict knotted_verdict(const ToricRegion& region, double margin) {
  Verdict v;
  if (region.is_ellipsoid()) {
    v.status = VerdictStatus::NotApplicable;
    v.case_label = "ellipsoid";
    v.notes.push_back("embeddings between ellipsoids are never knotted");
    return v;
  }
  v.case_label = knot_case(region);
  DeltaEllBound upper = delta_ell_upper(region);
  Quantity lower = delta_u_lower(region);
  compare_into(v, upper.bound, lower, margin);
  v.notes.push_back("upper bound route: " + upper.route + " (" + upper.witness + ")");
  for (auto& n : upper.notes) v.notes.push_back(n);
  if (upper.certificate) v.certificates.push_back(*upper.certificate);
  return v;
}

std::optional<bool> lp_threshold_check(double p) {
  if (!(p > 0) || !std::isfinite(p)) throw InvalidArgument("lp_threshold_check: p must be > 0");
  if (p == 2.0) return std::nullopt;
  if (p > 2.0) return true;
  double q = p / (p - 2.0);
  return std::pow(2.0, q - 1.0) + 0.5 < 2.0 / 3.0;
}

Verdict polydisk_knot_check(const Rational& a, const Rational& b, const Rational& m,
                            const Rational& eps) {
  if (!m.is_integer() || m < 1) throw InvalidArgument("polydisk_knot_check: m must be an integer >= 1");
  if (eps.sign() < 0 || eps >= 1) throw InvalidArgument("polydisk_knot_check: eps must lie in [0,1)");
  Verdict v;
  v.case_label = "polydisk-into-polydisk";
  const Rational d = m + eps;
  struct Cond {
    bool ok;
    const char* text;
  };
  const Cond conds[] = {
      {a + b / (m * 2 + eps) < 1, "a + b/(2m+eps) < 1"},
      {a.sign() >= 0 && a <= b, "0 <= a <= b"},
      {b < d, "b < m+eps"},
      {d < a + b, "m+eps < a+b"},
  };
  bool all = true;
  for (const auto& c : conds) {
    if (!c.ok) {
      all = false;
      v.notes.push_back(std::string("condition fails: ") + c.text);
    }
  }
  v.certificates.push_back(check_longembed(m, eps));
  if (all && v.certificates.back().verified) {
    v.status = VerdictStatus::Knotted;
    v.window = std::pair{Quantity(d), Quantity(a + b)};
    v.notes.push_back("P(" + a.str() + "," + b.str() + ") -> E(1," + (m * 2 + eps).str() +
                      ") -> P(1," + d.str() + ")° is knotted since " + d.str() + " < " +
                      (a + b).str());
  } else {
    v.status = VerdictStatus::Inconclusive;
  }
  return v;
}

PolydiskEmbeddingParams allpoly_params(const Rational& y) {
  if (y < 1) throw InvalidArgument("allpoly_params: y must be >= 1");
  PolydiskEmbeddingParams out;
  // Into P(1,y): y = m + eps.
  Rational m(y.floor());
  Rational eps = y - m;
  out.a = Rational(1, 2);
  out.b = m + (eps * 3 - 1) / 4;
  out.into_check = {out.a, out.b, m, eps};
  // From P(1,y): y = 2k + delta with -1 <= delta < 1.
  Rational k(((y + 1) / 2).floor());
  Rational delta = y - k * 2;
  if (delta.sign() >= 0) {
    Rational lo = (k * 2 + delta) / ((k * 2 + delta + 1) * 2);
    Rational hi = (k * 4 + delta) / (k * 8 + delta * 3);
    Rational mu = (lo + hi) / 2;
    out.c = Rational(1) / mu;
    out.d = y / (mu * 2);
    out.from_check = {mu, mu * y, k, delta / 2};
    out.from_branch = "delta>=0";
  } else {
    Rational lo = Rational(1) + delta / (k * 4);
    Rational hi = Rational(1) + (delta + 1) / (k * 2);
    Rational alpha = (lo + hi) / 2;
    out.c = alpha * 2;
    out.d = alpha * 2 * k;
    out.from_check = {Rational(1) / (alpha * 2), y / (alpha * 2), k, Rational(0)};
    out.from_branch = "delta<0";
  }
  return out;
}

std::optional<Quantity> product_threshold(const ToricRegion& region) {
  if (region.is_ellipsoid() || !region.is_polygonal()) return std::nullopt;
  if (auto ab = oriented_rectangle(region); ab && ab->second < ab->first * 2)
    return Quantity(ab->first + ab->second);
  if (convex_in_cube(region)) return support_norm(region, dir(1, 1));
  return std::nullopt;
}

Verdict product_verdict(const ToricRegion& region, const std::vector<Rational>& factors,
                        double margin) {
  Verdict v;
  auto R = product_threshold(region);
  if (!R) {
    v.status = VerdictStatus::NotApplicable;
    v.case_label = "product";
    v.notes.push_back("region is not a cube-sandwiched convex domain or a polydisk with b < 2a");
    return v;
  }
  if (factors.empty()) throw InvalidArgument("product_verdict: at least one ellipsoid factor");
  v = knotted_verdict(region, margin);
  v.case_label = "product:" + v.case_label;
  for (const auto& b : factors) {
    if (b < R->rational()) {
      v.status = VerdictStatus::Inconclusive;
      v.window.reset();
      v.notes.push_back("factor " + b.str() + " below threshold R = " + R->rational().str());
    }
  }
  v.notes.push_back("product threshold R = " + R->rational().str());
  return v;
}

}  // namespace toric
