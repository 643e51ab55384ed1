#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toric/domains.hpp"
#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric::cli {

struct ParseError : InvalidArgument {
  ParseError(std::size_t position, const std::string& what);
  std::size_t position;
};

// Domain mini-language:
//   polydisk:a,b   ellipsoid:a,b   quad:a,b,x,y   lp:p,r
//   convex-poly:x1,y1;x2,y2;...    concave-poly:x1,y1;...
// Numbers are integers, decimals (read exactly) or p/q. Polygon points are
// separated by ';'. Within a point the coordinates are separated by ',', or
// by '/' when the point contains exactly one '/' (so "1/2;..." is x=1, y=2).
// convex-poly lists the vertices after the origin in counterclockwise order
// (a leading "0,0" is optional); concave-poly lists the chain from (a,0) to (0,b).
ToricRegion parse_domain_spec(std::string_view spec);

// Comma-separated rationals; `offset` is added to reported positions.
std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset = 0);

}  // namespace toric::cli
