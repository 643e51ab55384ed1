#include "toric/cli/spec_parser.hpp"

#include <algorithm>

namespace toric::cli {

ParseError::ParseError(std::size_t pos, const std::string& what)
    : InvalidArgument("parse error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;
};

std::vector<Piece> split(std::string_view s, char sep, std::size_t offset) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back({s.substr(start, i - start), offset + start});
      start = i + 1;
    }
  }
  return out;
}

Rational number(const Piece& p) {
  if (p.text.empty()) throw ParseError(p.offset, "expected a number");
  auto q = Rational::try_parse(p.text);
  if (!q) throw ParseError(p.offset, "malformed number '" + std::string(p.text) + "'");
  return *q;
}

std::vector<Rational> numbers(std::string_view body, std::size_t offset, std::size_t expected,
                              const std::string& form) {
  auto parts = split(body, ',', offset);
  if (parts.size() != expected)
    throw ParseError(offset, "expected " + form + " (" + std::to_string(expected) + " numbers)");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(number(p));
  return out;
}

Point parse_point(const Piece& p) {
  auto comma = split(p.text, ',', p.offset);
  if (comma.size() == 2) return {number(comma[0]), number(comma[1])};
  if (comma.size() == 1 && std::count(p.text.begin(), p.text.end(), '/') == 1) {
    auto slash = split(p.text, '/', p.offset);
    return {number(slash[0]), number(slash[1])};
  }
  throw ParseError(p.offset, "expected a point 'x,y'");
}

std::vector<Point> points(std::string_view body, std::size_t offset) {
  std::vector<Point> out;
  for (const auto& piece : split(body, ';', offset)) {
    if (piece.text.empty()) throw ParseError(piece.offset, "empty point");
    out.push_back(parse_point(piece));
  }
  return out;
}

template <class Fn>
ToricRegion validated(Fn make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidArgument(std::string("invalid domain: ") + e.what());
  }
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t offset) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',', offset)) out.push_back(number(p));
  return out;
}

ToricRegion parse_domain_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected '<kind>:<parameters>'");
  const std::string_view kind = spec.substr(0, colon), body = spec.substr(colon + 1);
  const std::size_t at = colon + 1;
  if (kind == "polydisk") {
    auto v = numbers(body, at, 2, "polydisk:a,b");
    return validated([&] { return ToricRegion::rectangle(v[0], v[1]); });
  }
  if (kind == "ellipsoid") {
    auto v = numbers(body, at, 2, "ellipsoid:a,b");
    return validated([&] { return ToricRegion::triangle(v[0], v[1]); });
  }
  if (kind == "quad") {
    auto v = numbers(body, at, 4, "quad:a,b,x,y");
    return validated([&] { return ToricRegion::quadrilateral(v[0], v[1], v[2], v[3]); });
  }
  if (kind == "lp") {
    auto v = numbers(body, at, 2, "lp:p,r");
    return validated([&] { return ToricRegion::lp_ball(v[0].to_double(), v[1].to_double()); });
  }
  if (kind == "convex-poly") {
    auto pts = points(body, at);
    if (pts.empty() || pts.front() != Point{0, 0}) pts.insert(pts.begin(), Point{0, 0});
    return validated([&] { return ToricRegion::convex_polygon(pts); });
  }
  if (kind == "concave-poly") {
    auto pts = points(body, at);
    return validated([&] { return ToricRegion::concave_polygon(pts); });
  }
  throw ParseError(0, "unknown domain kind '" + std::string(kind) + "'");
}

}  // namespace toric::cli
