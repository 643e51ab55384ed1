#include "toric/domains.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr double kLpErrorBar = 1e-12;

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Direction& d, const Point& p) { return d.a() * p.x + d.b() * p.y; }

std::string point_str(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::vector<Point> dedupe(std::vector<Point> pts) {
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Chain from (a,0) to (0,b), x nonincreasing and y nondecreasing; `left`
// selects the turn direction that the chain must keep.
void check_chain(const std::vector<Point>& chain, bool left, const char* what) {
  if (chain.size() < 2) throw InvalidArgument(std::string(what) + ": chain needs two points");
  const Point& first = chain.front();
  const Point& last = chain.back();
  if (!first.y.is_zero() || first.x.sign() <= 0)
    throw InvalidArgument(std::string(what) + ": chain must start at (a,0) with a > 0");
  if (!last.x.is_zero() || last.y.sign() <= 0)
    throw InvalidArgument(std::string(what) + ": chain must end at (0,b) with b > 0");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Point& u = chain[i];
    const Point& v = chain[i + 1];
    if (u == v) throw InvalidArgument(std::string(what) + ": repeated vertex " + point_str(u));
    if (v.x > u.x || v.y < u.y)
      throw InvalidArgument(std::string(what) + ": boundary not monotone at " + point_str(v));
    if (u.x.sign() < 0 || u.y.sign() < 0)
      throw InvalidArgument(std::string(what) + ": vertex outside the quadrant");
  }
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    int s = cross(chain[i], chain[i + 1], chain[i + 2]).sign();
    if ((left && s < 0) || (!left && s > 0)) {
      throw InvalidArgument(std::string(what) + (left ? ": symmetrized region not convex at "
                                                      : ": complement not convex at ") +
                            point_str(chain[i + 1]));
    }
  }
}

double lp_dual_norm(double a, double b, double P) {
  return std::pow(std::pow(a, P) + std::pow(b, P), 1.0 / P);
}

// Closed polygon boundary (ccw) for polygonal kinds.
std::vector<Point> closed_boundary(const ToricRegion& r) {
  if (r.kind() == RegionKind::ConcavePolygon) {
    std::vector<Point> out{{0, 0}};
    out.insert(out.end(), r.vertices().begin(), r.vertices().end());
    return out;
  }
  return r.vertices();
}

// Chain from (a,0) to (0,b) for polygonal kinds.
std::vector<Point> outer_chain(const ToricRegion& r) {
  if (r.kind() == RegionKind::ConcavePolygon) return r.vertices();
  return {r.vertices().begin() + 1, r.vertices().end()};
}

void require_polygonal(const ToricRegion& r, const char* op) {
  if (!r.is_polygonal())
    throw WrongKind(std::string(op) + " requires a polygonal region; got " + r.describe());
}

}  // namespace

Direction::Direction(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() < 0 || b_.sign() < 0) throw InvalidArgument("direction entries must be >= 0");
  if (a_.is_zero() && b_.is_zero()) throw InvalidArgument("zero direction vector");
}

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Rectangle: return "Rectangle";
    case RegionKind::Triangle: return "Triangle";
    case RegionKind::ConvexPolygon: return "ConvexPolygon";
    case RegionKind::ConcavePolygon: return "ConcavePolygon";
    case RegionKind::LpBall: return "LpBall";
  }
  return "?";
}

std::string to_string(QuadKind k) {
  switch (k) {
    case QuadKind::Concave: return "Concave";
    case QuadKind::Convex: return "Convex";
    case QuadKind::Ellipsoid: return "Ellipsoid";
    case QuadKind::Invalid: return "Invalid";
  }
  return "?";
}

ToricRegion ToricRegion::rectangle(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw InvalidArgument("rectangle sides must be > 0");
  ToricRegion r;
  r.kind_ = RegionKind::Rectangle;
  r.vertices_ = {{0, 0}, {a, 0}, {a, b}, {0, b}};
  return r;
}

ToricRegion ToricRegion::triangle(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw InvalidArgument("ellipsoid parameters must be > 0");
  ToricRegion r;
  r.kind_ = RegionKind::Triangle;
  r.vertices_ = {{0, 0}, {a, 0}, {0, b}};
  return r;
}

ToricRegion ToricRegion::convex_polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3 || !(vertices.front() == Point{0, 0}))
    throw InvalidArgument("convex polygon must start at (0,0) and have >= 3 vertices");
  check_chain({vertices.begin() + 1, vertices.end()}, true, "convex polygon");
  ToricRegion r;
  r.kind_ = RegionKind::ConvexPolygon;
  r.vertices_ = std::move(vertices);
  return r;
}

ToricRegion ToricRegion::concave_polygon(std::vector<Point> chain) {
  check_chain(chain, false, "concave polygon");
  ToricRegion r;
  r.kind_ = RegionKind::ConcavePolygon;
  r.vertices_ = std::move(chain);
  return r;
}

ToricRegion ToricRegion::quadrilateral(const Rational& a, const Rational& b, const Rational& x,
                                       const Rational& y) {
  switch (classify_quadrilateral(a, b, x, y)) {
    case QuadKind::Ellipsoid: return triangle(a, b);
    case QuadKind::Concave: return concave_polygon(dedupe({{a, 0}, {x, y}, {0, b}}));
    case QuadKind::Convex:
      if (x == a && y == b) return rectangle(a, b);
      return convex_polygon(dedupe({{0, 0}, {a, 0}, {x, y}, {0, b}}));
    case QuadKind::Invalid: break;
  }
  throw InvalidArgument("T(" + a.str() + "," + b.str() + "," + x.str() + "," + y.str() +
                        ") violates the quadrilateral conditions");
}

ToricRegion ToricRegion::lp_ball(double p, double r) {
  if (!(p > 0) || !std::isfinite(p)) throw InvalidArgument("l^p exponent must be > 0");
  if (!(r > 0) || !std::isfinite(r)) throw InvalidArgument("l^p scale must be > 0");
  ToricRegion reg;
  reg.kind_ = RegionKind::LpBall;
  reg.p_ = p;
  reg.r_ = r;
  return reg;
}

bool ToricRegion::is_convex() const {
  switch (kind_) {
    case RegionKind::Rectangle:
    case RegionKind::Triangle:
    case RegionKind::ConvexPolygon: return true;
    case RegionKind::ConcavePolygon: return false;
    case RegionKind::LpBall: return p_ >= 2.0;
  }
  return false;
}

bool ToricRegion::is_concave() const {
  switch (kind_) {
    case RegionKind::Triangle:
    case RegionKind::ConcavePolygon: return true;
    case RegionKind::Rectangle:
    case RegionKind::ConvexPolygon: return false;
    case RegionKind::LpBall: return p_ <= 2.0;
  }
  return false;
}

bool ToricRegion::is_ellipsoid() const {
  return kind_ == RegionKind::Triangle || (kind_ == RegionKind::LpBall && p_ == 2.0);
}

Quantity ToricRegion::x_intercept() const {
  if (kind_ == RegionKind::LpBall) return Quantity::real(r_, 0.0);
  return outer_chain(*this).front().x;
}

Quantity ToricRegion::y_intercept() const {
  if (kind_ == RegionKind::LpBall) return Quantity::real(r_, 0.0);
  return outer_chain(*this).back().y;
}

ToricRegion ToricRegion::scaled(const Rational& zeta) const {
  if (zeta.sign() <= 0) throw InvalidArgument("scale factor must be > 0");
  ToricRegion r = *this;
  for (auto& v : r.vertices_) v = {v.x * zeta, v.y * zeta};
  r.r_ = r_ * zeta.to_double();
  return r;
}

ToricRegion ToricRegion::swapped() const {
  ToricRegion r = *this;
  for (auto& v : r.vertices_) std::swap(v.x, v.y);
  if (kind_ == RegionKind::ConcavePolygon)
    std::reverse(r.vertices_.begin(), r.vertices_.end());
  else if (is_polygonal())
    std::reverse(r.vertices_.begin() + 1, r.vertices_.end());
  return r;
}

std::string ToricRegion::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ == RegionKind::LpBall) {
    os << "(p=" << p_ << ",r=" << r_ << ")";
  } else {
    os << "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      os << (i ? " " : "") << "(" << vertices_[i].x << "," << vertices_[i].y << ")";
    os << "]";
  }
  return os.str();
}

Quantity support_norm(const ToricRegion& region, const Direction& dir) {
  if (region.kind() == RegionKind::LpBall) {
    double a = dir.a().to_double(), b = dir.b().to_double();
    double p = region.p();
    double v = p > 2.0 ? lp_dual_norm(a, b, p / (p - 2.0)) : std::max(a, b);
    v *= region.r();
    return Quantity::real(v, kLpErrorBar * std::max(1.0, v));
  }
  Rational best = 0;
  for (const auto& v : region.vertices()) best = std::max(best, dot(dir, v));
  return best;
}

Quantity cosupport(const ToricRegion& region, const Direction& dir) {
  if (!region.is_concave())
    throw WrongKind("cosupport requires a concave region; got " + region.describe());
  if (region.kind() == RegionKind::LpBall) {
    double a = dir.a().to_double(), b = dir.b().to_double();
    double p = region.p();
    double v;
    if (p == 2.0) {
      v = std::min(a, b);
    } else if (a == 0.0 || b == 0.0) {
      v = 0.0;
    } else {
      double q = p / (p - 2.0);
      v = lp_dual_norm(a, b, q);
    }
    v *= region.r();
    return Quantity::real(v, kLpErrorBar * std::max(1.0, v));
  }
  auto chain = outer_chain(region);
  Rational best = dot(dir, chain.front());
  for (const auto& v : chain) best = std::min(best, dot(dir, v));
  return best;
}

QuadKind classify_quadrilateral(const Rational& a, const Rational& b, const Rational& x,
                                const Rational& y) {
  if (a.sign() < 0 || b.sign() < 0 || x.sign() < 0 || y.sign() < 0)
    throw InvalidArgument("quadrilateral parameters must be >= 0");
  if (a.is_zero() || b.is_zero()) return QuadKind::Invalid;
  if (x > a || y > b) return QuadKind::Invalid;
  Rational s = x / a + y / b;
  if (s < 1) return x + y <= std::min(a, b) ? QuadKind::Concave : QuadKind::Invalid;
  if (s > 1) return x + y >= std::max(a, b) ? QuadKind::Convex : QuadKind::Invalid;
  return QuadKind::Ellipsoid;
}

ToricRegion scale_region(const ToricRegion& region, const Rational& zeta) {
  return region.scaled(zeta);
}

bool contains_point(const ToricRegion& region, const Point& pt) {
  require_polygonal(region, "contains_point");
  if (pt.x.sign() < 0 || pt.y.sign() < 0) return false;
  if (region.kind() == RegionKind::ConcavePolygon) {
    const auto& c = region.vertices();
    if (pt.x > c.front().x || pt.y > c.back().y) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (cross(c[i], c[i + 1], pt).sign() >= 0) return true;
    return false;
  }
  const auto& v = region.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], pt).sign() < 0) return false;
  return true;
}

bool in_relative_interior(const ToricRegion& region, const Point& pt) {
  require_polygonal(region, "in_relative_interior");
  if (pt.x.sign() < 0 || pt.y.sign() < 0) return false;
  auto chain = outer_chain(region);
  if (region.kind() == RegionKind::ConcavePolygon) {
    if (pt.x >= chain.front().x || pt.y >= chain.back().y) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (cross(chain[i], chain[i + 1], pt).sign() > 0) return true;
    return false;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (cross(chain[i], chain[i + 1], pt).sign() <= 0) return false;
  return true;
}

bool contains_region(const ToricRegion& outer, const ToricRegion& inner) {
  require_polygonal(outer, "contains_region");
  require_polygonal(inner, "contains_region");
  auto in = closed_boundary(inner);
  auto out = closed_boundary(outer);
  for (const auto& v : in)
    if (!contains_point(outer, v)) return false;
  // Split each inner edge at every parameter where it meets the outer
  // boundary and test the midpoints of the pieces.
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Point& p0 = in[i];
    const Point& p1 = in[(i + 1) % in.size()];
    Point d1{p1.x - p0.x, p1.y - p0.y};
    Rational len2 = d1.x * d1.x + d1.y * d1.y;
    std::vector<Rational> ts{0, 1};
    for (std::size_t j = 0; j < out.size(); ++j) {
      const Point& q0 = out[j];
      const Point& q1 = out[(j + 1) % out.size()];
      Point d2{q1.x - q0.x, q1.y - q0.y};
      Point w{q0.x - p0.x, q0.y - p0.y};
      Rational denom = d1.x * d2.y - d1.y * d2.x;
      if (!denom.is_zero()) {
        Rational t = (w.x * d2.y - w.y * d2.x) / denom;
        Rational u = (w.x * d1.y - w.y * d1.x) / denom;
        if (u.sign() >= 0 && u <= 1 && t.sign() > 0 && t < 1) ts.push_back(t);
      } else if ((w.x * d1.y - w.y * d1.x).is_zero()) {
        for (const Point* q : {&q0, &q1}) {
          Rational t = ((q->x - p0.x) * d1.x + (q->y - p0.y) * d1.y) / len2;
          if (t.sign() > 0 && t < 1) ts.push_back(t);
        }
      }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      Rational m = (ts[k] + ts[k + 1]) / 2;
      if (!contains_point(outer, {p0.x + m * d1.x, p0.y + m * d1.y})) return false;
    }
  }
  return true;
}

ToricRegion lp_polygon(const ToricRegion& ball, int n, Bound bound) {
  if (ball.kind() != RegionKind::LpBall) throw WrongKind("lp_polygon requires an LpBall region");
  if (n < 3) throw InvalidArgument("lp_polygon needs at least 3 vertices");
  const double s = ball.p() / 2.0;
  const bool convex = ball.p() >= 2.0;
  // At p = 2 the region is a triangle and the chord chain is exact.
  const bool chord = ball.p() == 2.0 || (bound == Bound::Inner) == convex;
  const double margin = bound == Bound::Inner ? 1.0 - 1e-9 : 1.0 + 1e-9;
  const double grid = std::ldexp(1.0, 30);
  auto curve = [s](double th) {
    return std::pair{std::pow(std::cos(th), 2.0 / s), std::pow(std::sin(th), 2.0 / s)};
  };
  std::vector<std::pair<double, double>> pts;
  const double quarter = std::numbers::pi / 2;
  if (chord) {
    pts.push_back({1.0, 0.0});
    for (int i = 1; i + 1 < n; ++i) pts.push_back(curve(quarter * i / (n - 1)));
    pts.push_back({0.0, 1.0});
  } else {
    // Tangent lines g . X = g . X0 with g the gradient of x^s + y^s.
    std::vector<std::array<double, 3>> lines;
    for (int j = 0; j + 1 < n; ++j) {
      auto [x0, y0] = curve(quarter * (j + 0.5) / (n - 1));
      double gx = std::pow(x0, s - 1), gy = std::pow(y0, s - 1);
      lines.push_back({gx, gy, gx * x0 + gy * y0});
    }
    pts.push_back({lines.front()[2] / lines.front()[0], 0.0});
    for (std::size_t j = 0; j + 1 < lines.size(); ++j) {
      const auto& l = lines[j];
      const auto& m = lines[j + 1];
      double det = l[0] * m[1] - l[1] * m[0];
      pts.push_back({(l[2] * m[1] - l[1] * m[2]) / det, (l[0] * m[2] - l[2] * m[0]) / det});
    }
    pts.push_back({0.0, lines.back()[2] / lines.back()[1]});
  }
  std::vector<Point> chain;
  for (auto [x, y] : pts) {
    auto snap = [&](double v) {
      double scaled = v * ball.r() * margin * grid;
      scaled = bound == Bound::Inner ? std::floor(scaled) : std::ceil(scaled);
      return Rational::from_double(scaled) / Rational::from_double(grid);
    };
    chain.push_back({snap(x), snap(y)});
  }
  chain = dedupe(std::move(chain));
  if (convex) {
    chain.insert(chain.begin(), Point{0, 0});
    return ToricRegion::convex_polygon(std::move(chain));
  }
  return ToricRegion::concave_polygon(std::move(chain));
}

}  // namespace toric
