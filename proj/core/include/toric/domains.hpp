#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Direction vector (alpha_1, alpha_2) with nonnegative entries, not both zero.
class Direction {
 public:
  Direction(Rational a, Rational b);
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Direction scaled(const Rational& t) const { return {a_ * t, b_ * t}; }

 private:
  Rational a_, b_;
};

enum class RegionKind { Rectangle, Triangle, ConvexPolygon, ConcavePolygon, LpBall };
enum class QuadKind { Concave, Convex, Ellipsoid, Invalid };

std::string to_string(RegionKind k);
std::string to_string(QuadKind k);

// Moment region Omega in the closed first quadrant.
//
// Convex kinds (Rectangle, ConvexPolygon, LpBall with p > 2) store the full
// boundary counterclockwise from (0,0): (0,0), (a,0), ..., (0,b).
// Concave kinds (ConcavePolygon, LpBall with p < 2) store only the inner
// boundary chain from (a,0) to (0,b); Omega is the region between it and
// the axes. A Triangle is both and stores (0,0), (a,0), (0,b).
//
// LpBall(p, r) is r * {x^(p/2) + y^(p/2) <= 1}; r scales the moment region,
// so the complex l^p ball of radius rho has r = pi * rho^2.
class ToricRegion {
 public:
  static ToricRegion rectangle(const Rational& a, const Rational& b);
  static ToricRegion triangle(const Rational& a, const Rational& b);
  // Vertex list (0,0),(a,0),...,(0,b); validates that the symmetrized region is convex.
  static ToricRegion convex_polygon(std::vector<Point> vertices);
  // Chain from (a,0) to (0,b); validates that the complement is convex.
  static ToricRegion concave_polygon(std::vector<Point> chain);
  // T(a,b,x,y) as a polygon of the appropriate kind.
  static ToricRegion quadrilateral(const Rational& a, const Rational& b, const Rational& x,
                                   const Rational& y);
  static ToricRegion lp_ball(double p, double r);

  RegionKind kind() const { return kind_; }
  bool is_polygonal() const { return kind_ != RegionKind::LpBall; }
  bool is_convex() const;
  bool is_concave() const;
  // Triangles and the p = 2 ball: toric domains that are ellipsoids.
  bool is_ellipsoid() const;

  const std::vector<Point>& vertices() const { return vertices_; }
  double p() const { return p_; }
  double r() const { return r_; }

  // Axis intercepts (a, b): Omega meets the x-axis in [0,a] and the y-axis in [0,b].
  Quantity x_intercept() const;
  Quantity y_intercept() const;

  ToricRegion scaled(const Rational& zeta) const;
  // Reflection (x,y) -> (y,x).
  ToricRegion swapped() const;

  std::string describe() const;

 private:
  ToricRegion() = default;
  RegionKind kind_ = RegionKind::Triangle;
  std::vector<Point> vertices_;
  double p_ = 0.0, r_ = 0.0;
};

// ||alpha||*_Omega = sup { alpha . v : v in Omega }.
Quantity support_norm(const ToricRegion& region, const Direction& dir);
// [alpha]_Omega = inf { alpha . v : v in [0,inf)^2 \ Omega }; concave kinds only.
Quantity cosupport(const ToricRegion& region, const Direction& dir);

QuadKind classify_quadrilateral(const Rational& a, const Rational& b, const Rational& x,
                                const Rational& y);

ToricRegion scale_region(const ToricRegion& region, const Rational& zeta);

// Exact point membership for polygonal kinds.
bool contains_point(const ToricRegion& region, const Point& pt);
// Membership with the non-axis boundary excluded: points on the coordinate
// axes count as interior, points on the outer boundary do not.
bool in_relative_interior(const ToricRegion& region, const Point& pt);
// Exact containment test for polygonal regions.
bool contains_region(const ToricRegion& outer, const ToricRegion& inner);

enum class Bound { Inner, Outer };

// Rational polygon inside (Inner) or containing (Outer) an LpBall region, with
// `n` sample points on the boundary curve. Both approximations keep the
// convexity class of the ball.
ToricRegion lp_polygon(const ToricRegion& ball, int n, Bound bound);

}  // namespace toric
