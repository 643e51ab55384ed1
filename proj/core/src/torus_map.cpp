#include "toric/torus_map.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "toric/errors.hpp"

namespace toric::torus {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 vec(const SpherePoint& p) { return {p.v1, p.v2, p.v3}; }
SpherePoint point(const Vec3& a) { return {a[0], a[1], a[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

double arg_or_zero(Complex z) { return z == Complex{} ? 0.0 : std::arg(z); }

SpherePoint rotate_z(double t, const SpherePoint& p) {
  const double c = std::cos(t), s = std::sin(t);
  return {c * p.v1 - s * p.v2, s * p.v1 + c * p.v2, p.v3};
}

// sqrt that absorbs tiny negative rounding at the boundary.
double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

constexpr double kPoleGuard = 1e-12;
constexpr double kAntidiagonalGuard = 1e-9;
constexpr double kSingularGuard = 1e-9;

}  // namespace

double SpherePoint::norm_residual() const {
  return std::abs(v1 * v1 + v2 * v2 + v3 * v3 - 1.0);
}

SpherePoint SpherePoint::normalized() const {
  const double n = norm(vec(*this));
  if (n == 0) throw DomainError("cannot normalize the zero vector");
  return {v1 / n, v2 / n, v3 / n};
}

double distance(const SpherePoint& a, const SpherePoint& b) {
  return norm({a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3});
}

double distance(const SpherePair& a, const SpherePair& b) {
  return std::max(distance(a.v, b.v), distance(a.w, b.w));
}

double capacity_of_radius(double r) { return std::numbers::pi * r * r; }
double radius_of_capacity(double capacity) {
  if (capacity < 0) throw InvalidArgument("negative capacity");
  return std::sqrt(capacity / std::numbers::pi);
}

double F1(const SpherePair& p) { return p.v.v3 + p.w.v3; }

double F2(const SpherePair& p) {
  return norm({p.v.v1 + p.w.v1, p.v.v2 + p.w.v2, p.v.v3 + p.w.v3});
}

std::array<double, 2> J_map(const SpherePair& p) {
  const double f2 = F2(p);
  return {2.0 - f2, f2 - F1(p)};
}

SpherePair flow_F1(double t, const SpherePair& p) { return {rotate_z(t, p.v), rotate_z(t, p.w)}; }

SpherePair flow_F2(double t, const SpherePair& p) {
  const Vec3 v = vec(p.v), w = vec(p.w);
  const Vec3 sum{v[0] + w[0], v[1] + w[1], v[2] + w[2]};
  const double n = norm(sum);
  if (n < kAntidiagonalGuard) throw DomainError("flow_F2: pair is within 1e-9 of the antidiagonal");
  const double c = std::cos(t), s = std::sin(t);
  const Vec3 wv = cross(w, v);
  Vec3 a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = sum[i] / 2 + c * (v[i] - w[i]) / 2 + s * wv[i] / n;
    b[i] = sum[i] / 2 + c * (w[i] - v[i]) / 2 - s * wv[i] / n;
  }
  return {point(a), point(b)};
}

SpherePair section_s(double x, double y) {
  if (!(x >= 0 && y >= 0 && x / 2 + y / 4 < 1))
    throw DomainError("section_s: (x, y) outside {x/2 + y/4 < 1, x, y >= 0}");
  const double a = safe_sqrt(x * (1 - x / 4));
  const double b = safe_sqrt(y * (1 - x / 2 - y / 4));
  const double h = 1 - (x + y) / 2;
  return {{a, b, h}, {-a, b, h}};
}

bool in_phi_domain(const C2Point& p) { return 2 * std::norm(p.w) + std::norm(p.z) < 8; }

SpherePair phi_flow(const C2Point& p) {
  if (!in_phi_domain(p)) throw DomainError("phi: point outside 2|w|^2 + |z|^2 < 8");
  const double theta = arg_or_zero(p.w), phi = arg_or_zero(p.z);
  const SpherePair base = section_s(std::norm(p.w) / 2, std::norm(p.z) / 2);
  return flow_F1(phi, flow_F2(theta - phi, base));
}

namespace {

SpherePoint gamma(Complex w, Complex z) {
  const double w2 = std::norm(w), z2 = std::norm(z);
  const double inner = 8 - 2 * w2 - z2;
  const Complex i{0, 1};
  const Complex planar = std::sqrt(8 - w2) * (inner * w + std::conj(w) * z * z) / (8 * (4 - w2)) +
                         i * z / 4.0 * safe_sqrt(inner);
  const double height = 1 - (w2 + z2) / 4 -
                        safe_sqrt((8 - w2) * inner) / (4 * (4 - w2)) * std::imag(w * std::conj(z));
  return SpherePoint::from_planar(planar, height);
}

}  // namespace

SpherePair phi_closed(const C2Point& p) {
  if (!in_phi_domain(p)) throw DomainError("phi: point outside 2|w|^2 + |z|^2 < 8");
  if (std::norm(p.w) > 4 - kSingularGuard)
    throw DomainError("phi_closed: |w|^2 within 1e-9 of the singular value 4");
  return {gamma(p.w, p.z), gamma(-p.w, p.z)};
}

Complex sigma_map(const SpherePoint& v) {
  if (v.v3 <= -1 + kPoleGuard) throw DomainError("sigma: point at the south pole");
  return std::sqrt(2 / (1 + v.v3)) * v.planar();
}

SpherePoint sigma_inverse(Complex zeta) {
  const double r2 = std::norm(zeta);
  if (r2 >= 4) throw DomainError("sigma_inverse: outside the open disk of radius 2");
  return SpherePoint::from_planar(zeta * std::sqrt(1 - r2 / 4), 1 - r2 / 2);
}

double G1(const C2Point& p) { return 2 - (std::norm(p.w) + std::norm(p.z)) / 2; }

double G2(const C2Point& p) {
  const Complex a = std::sqrt(1 - std::norm(p.w) / 4) * p.w;
  const Complex b = std::sqrt(1 - std::norm(p.z) / 4) * p.z;
  const Complex s = a + b;
  const double h = G1(p);
  return std::sqrt(std::norm(s) + h * h);
}

bool parabola_safe(const C2Point& p) {
  const double x = std::norm(p.w) / 2, y = std::norm(p.z) / 2;
  return y < x * x / 2 - 3 * x + 4;
}

std::optional<C2Point> sigma_phi(const C2Point& p) {
  const SpherePair s = phi_closed(p);
  if (s.v.v3 <= -1 + kPoleGuard || s.w.v3 <= -1 + kPoleGuard) return std::nullopt;
  return C2Point{sigma_map(s.v), sigma_map(s.w)};
}

C2Point embed_square(double c, const C2Point& p) {
  if (!(c > 1 && c < 4 - 2 * std::numbers::sqrt2))
    throw InvalidArgument("embed_square: c must satisfy 1 < c < 4 - 2 sqrt 2");
  if (std::norm(p.w) > 2 * c || std::norm(p.z) > 2 * c)
    throw DomainError("embed_square: input outside P(2 pi c, 2 pi c)");
  if (!parabola_safe(p))
    throw DomainError("embed_square: input above the parabola y = x^2/2 - 3x + 4");
  auto out = sigma_phi(p);
  if (!out) throw DomainError("embed_square: image meets the pole locus");
  return *out;
}

double symplectic_residual(const C2Point& p, double h) {
  auto to_real = [](const C2Point& q) {
    return std::array<double, 4>{q.w.real(), q.w.imag(), q.z.real(), q.z.imag()};
  };
  auto from_real = [](const std::array<double, 4>& a) {
    return C2Point{{a[0], a[1]}, {a[2], a[3]}};
  };
  const auto x = to_real(p);
  double M[4][4];
  for (int j = 0; j < 4; ++j) {
    auto plus = x, minus = x;
    plus[j] += h;
    minus[j] -= h;
    auto fp = sigma_phi(from_real(plus)), fm = sigma_phi(from_real(minus));
    if (!fp || !fm) return std::numeric_limits<double>::infinity();
    const auto a = to_real(*fp), b = to_real(*fm);
    for (int i = 0; i < 4; ++i) M[i][j] = (a[i] - b[i]) / (2 * h);
  }
  static constexpr double omega[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s += M[k][i] * omega[k][l] * M[l][j];
      worst = std::max(worst, std::abs(s - omega[i][j]));
    }
  }
  return worst;
}

}  // namespace toric::torus
