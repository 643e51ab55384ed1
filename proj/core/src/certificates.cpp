#include "toric/certificates.hpp"

#include <cmath>

#include "toric/errors.hpp"
#include "toric/weights.hpp"

namespace toric {

namespace {

std::string tuple_str(std::initializer_list<const Rational*> xs) {
  std::string s = "(";
  bool first = true;
  for (const Rational* x : xs) {
    s += (first ? "" : ",") + x->str();
    first = false;
  }
  return s + ")";
}

void require_nonnegative(std::initializer_list<const Rational*> xs, const char* op) {
  for (const Rational* x : xs)
    if (x->sign() < 0) throw InvalidArgument(std::string(op) + ": parameters must be >= 0");
}

void gate(EmbeddingCertificate& c, bool ok, const std::string& hypothesis) {
  if (!ok) c.failed_hypotheses.push_back(hypothesis);
}

void add_packing(EmbeddingCertificate& c, std::string description, WeightSeq w, Rational t) {
  RouteStep step;
  step.description = std::move(description);
  step.packing = packs(w, t);
  step.weights = std::move(w);
  step.t = std::move(t);
  c.route.push_back(std::move(step));
}

void finish(EmbeddingCertificate& c) {
  c.verified = c.failed_hypotheses.empty();
  for (const auto& s : c.route)
    if (s.packing && !s.packing->packs) c.verified = false;
}

std::string target_for_all_alpha(const std::string& domain) {
  return "alpha*" + domain + " for every alpha > 1";
}

}  // namespace

EmbeddingCertificate check_cvxaxy(const Rational& a, const Rational& b, const Rational& x,
                                  const Rational& y) {
  require_nonnegative({&a, &b, &x, &y}, "check_cvxaxy");
  EmbeddingCertificate c;
  c.name = "cvxaxy";
  c.source = "E(" + a.str() + "," + (x + y).str() + ")";
  c.target = target_for_all_alpha("T" + tuple_str({&a, &b, &x, &y}));
  gate(c, a.sign() > 0, "a > 0");
  gate(c, x <= a, "x <= a");
  gate(c, y <= b, "y <= b");
  gate(c, a <= b, "a <= b");
  gate(c, b <= x + y, "b <= x+y");
  if (c.failed_hypotheses.empty()) {
    Rational h = x + y;
    add_packing(c, "W(a,x+y) + W(x+y-a,y) + W(x+y-b,x) packs into [x+y]",
                ellipsoid_weights(a, h) + ellipsoid_weights(h - a, y) + ellipsoid_weights(h - b, x),
                h);
  }
  finish(c);
  return c;
}

EmbeddingCertificate check_ccvaxy(const Rational& a, const Rational& b, const Rational& x,
                                  const Rational& y) {
  require_nonnegative({&a, &b, &x, &y}, "check_ccvaxy");
  EmbeddingCertificate c;
  c.name = "ccvaxy";
  c.source = "T" + tuple_str({&a, &b, &x, &y});
  c.target = target_for_all_alpha("E(" + b.str() + "," + (x + y).str() + ")");
  gate(c, x + y <= a, "x+y <= a");
  gate(c, a <= b, "a <= b");
  gate(c, b.sign() > 0, "b > 0");
  if (c.failed_hypotheses.empty()) {
    Rational s = x + y;
    add_packing(c, "[x+y] + W(a-x-y,y) + W(b-x-y,x) + W(b,b-x-y) packs into [b]",
                WeightSeq({s}) + ellipsoid_weights(a - s, y) + ellipsoid_weights(b - s, x) +
                    ellipsoid_weights(b, b - s),
                b);
  }
  finish(c);
  return c;
}

EmbeddingCertificate check_longembed(const Rational& m, const Rational& eps) {
  if (!m.is_integer() || m < 1) throw InvalidArgument("check_longembed: m must be an integer >= 1");
  if (eps.sign() < 0 || eps >= 1) throw InvalidArgument("check_longembed: eps must lie in [0,1)");
  EmbeddingCertificate c;
  c.name = "longembed";
  c.source = "E(1," + (m * 2 + eps).str() + ")";
  c.target = target_for_all_alpha("P(1," + (m + eps).str() + ")");
  Rational me = m + eps;
  add_packing(c, "W(1,2m+eps) + W(m+eps,m+eps) + W(1,1) packs into [m+1+eps]",
              ellipsoid_weights(1, m * 2 + eps) + ellipsoid_weights(me, me) + ellipsoid_weights(1, 1),
              me + 1);
  finish(c);
  return c;
}

EmbeddingCertificate check_step2(const Rational& a, const Rational& y, const Rational& b) {
  require_nonnegative({&a, &y, &b}, "check_step2");
  EmbeddingCertificate c;
  c.name = "step2";
  c.source = "E(" + ((a + b) / 3).str() + "," + (a * 2 + y).str() + ")";
  c.target = target_for_all_alpha("T" + tuple_str({&a, &b, &a, &y}));
  gate(c, a.sign() > 0, "a > 0");
  gate(c, a <= y, "a <= y");
  gate(c, y <= b, "y <= b");
  gate(c, b <= a * 2, "b <= 2a");
  if (c.failed_hypotheses.empty()) {
    add_packing(c, "W((a+b)/3,2a+y) + W(y,y) + W(a+y-b,a) packs into [a+y]",
                ellipsoid_weights((a + b) / 3, a * 2 + y) + ellipsoid_weights(y, y) +
                    ellipsoid_weights(a + y - b, a),
                a + y);
  }
  finish(c);
  return c;
}

namespace {

struct Candidate {
  Quantity bound;
  std::string route;
  std::string witness;
  std::optional<EmbeddingCertificate> certificate;
};

EmbeddingCertificate inclusion_certificate(const std::string& source, const std::string& target,
                                           bool holds, const std::string& what) {
  EmbeddingCertificate c;
  c.name = "inclusion";
  c.source = source;
  c.target = target;
  RouteStep s;
  s.description = what;
  c.route.push_back(s);
  if (!holds) c.failed_hypotheses.push_back(what);
  c.verified = holds;
  return c;
}

std::vector<Candidate> convex_candidates(const ToricRegion& region) {
  std::vector<Candidate> out;
  const Rational A = region.x_intercept().rational();
  const Rational B = region.y_intercept().rational();
  std::string tag = region.describe();

  // (a,0), (0,b), (x,y) with 0 < x <= a <= b <= x+y, with b = max(a, y).
  for (const auto& v : region.vertices()) {
    if (v.x.sign() <= 0 || v.y.sign() <= 0) continue;
    Rational s = v.x + v.y;
    if (s < A) continue;
    Rational b = std::max(A, v.y);
    Quantity bound = support_norm(region, Direction(Rational(1) / A, Rational(1) / s));
    out.push_back({bound, "case-a",
                   "a=" + A.str() + ",b=" + b.str() + ",x=" + v.x.str() + ",y=" + v.y.str(),
                   check_cvxaxy(A, b, v.x, v.y)});
  }
  if (region.kind() == RegionKind::Rectangle && B <= A * 2) {
    Quantity bound =
        support_norm(region, Direction(Rational(3) / (A + B), Rational(1) / (A * 2 + B)));
    out.push_back({bound, "case-c", "a=" + A.str() + ",b=" + B.str(), check_step2(A, B, B)});
  }
  Quantity incl = support_norm(region, Direction(Rational(1) / A, Rational(1) / B));
  bool holds = contains_region(region, ToricRegion::triangle(A, B));
  out.push_back({incl, "inclusion-only", "a=" + A.str() + ",b=" + B.str(),
                 inclusion_certificate("E(" + A.str() + "," + B.str() + ")", tag, holds,
                                       "triangle (0,0),(a,0),(0,b) lies in the region")});
  return out;
}

std::vector<Candidate> concave_candidates(const ToricRegion& region) {
  std::vector<Candidate> out;
  const Rational A = region.x_intercept().rational();
  const Rational B = region.y_intercept().rational();
  std::string tag = region.describe();

  // (a,0), (0,b), (x,y) in the closed complement with 0 < x+y <= a <= b.
  for (const auto& v : region.vertices()) {
    Rational s = v.x + v.y;
    if (s.sign() <= 0 || s > B) continue;
    Rational a = std::max(A, s);
    Quantity co = cosupport(region, Direction(Rational(1) / B, Rational(1) / s));
    if (co.rational().sign() <= 0) continue;
    out.push_back({Rational(1) / co.rational(), "case-b",
                   "a=" + a.str() + ",b=" + B.str() + ",x=" + v.x.str() + ",y=" + v.y.str(),
                   check_ccvaxy(a, B, v.x, v.y)});
  }
  Quantity co = cosupport(region, Direction(Rational(1) / A, Rational(1) / B));
  bool holds = contains_region(ToricRegion::triangle(A, B), region);
  out.push_back({Rational(1) / co.rational(), "inclusion-only", "a=" + A.str() + ",b=" + B.str(),
                 inclusion_certificate(tag, "E(" + A.str() + "," + B.str() + ")", holds,
                                       "region lies in the triangle (0,0),(a,0),(0,b)")});
  return out;
}

DeltaEllBound lp_bound(const ToricRegion& region) {
  const double p = region.p();
  const double r = region.r();
  DeltaEllBound res{Rational(1), "inclusion-only", "", std::nullopt, {}};
  if (p == 2.0) {
    res.witness = "round ball";
    return res;
  }
  // The diagonal boundary point (d, d) with d = 2^(-2/p) r maximizes x+y for
  // p > 2 and minimizes it for p < 2.
  const double d = std::pow(2.0, -2.0 / p) * r;
  std::vector<Candidate> cands;
  auto dir = [](double u, double v) {
    return Direction(Rational::from_double(u), Rational::from_double(v));
  };
  if (p > 2.0) {
    cands.push_back({support_norm(region, dir(1 / r, 1 / (2 * d))), "case-a",
                     "a=r,b=r,x=y=2^(-2/p)r", std::nullopt});
    cands.push_back({support_norm(region, dir(1 / r, 1 / r)), "inclusion-only", "a=b=r",
                     std::nullopt});
  } else {
    Quantity co = cosupport(region, dir(1 / r, 1 / (2 * d)));
    cands.push_back({Quantity::real(1 / co.value(), co.error_bar() / (co.value() * co.value())),
                     "case-b", "a=r,b=r,x=y=2^(-2/p)r", std::nullopt});
    Quantity ci = cosupport(region, dir(1 / r, 1 / r));
    cands.push_back({Quantity::real(1 / ci.value(), ci.error_bar() / (ci.value() * ci.value())),
                     "inclusion-only", "a=b=r", std::nullopt});
  }
  const Candidate* best = &cands.front();
  for (const auto& c : cands)
    if (c.bound.value() < best->bound.value()) best = &c;
  res.bound = best->bound;
  res.route = best->route;
  res.witness = best->witness;
  res.notes.push_back("closed-form evaluation with irrational witness; no packing certificate");
  return res;
}

}  // namespace

DeltaEllBound delta_ell_upper(const ToricRegion& region) {
  if (region.kind() == RegionKind::LpBall) return lp_bound(region);
  if (region.is_ellipsoid()) {
    DeltaEllBound res{Rational(1), "inclusion-only", "ellipsoid", std::nullopt, {}};
    res.notes.push_back("the region is an ellipsoid");
    return res;
  }
  // The bound is symmetric under swapping coordinates; orient so that a <= b.
  ToricRegion oriented = region;
  std::vector<std::string> notes;
  if (region.x_intercept().rational() > region.y_intercept().rational()) {
    oriented = region.swapped();
    notes.push_back("coordinates swapped so that the x-intercept is the smaller one");
  }
  auto cands = oriented.is_convex() ? convex_candidates(oriented) : concave_candidates(oriented);
  const Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (c.certificate && !c.certificate->verified) continue;
    if (!best || c.bound.rational() < best->bound.rational()) best = &c;
  }
  if (!best) throw DomainError("no applicable delta_ell bound for " + region.describe());
  DeltaEllBound res{best->bound, best->route, best->witness, best->certificate, notes};
  return res;
}

}  // namespace toric
