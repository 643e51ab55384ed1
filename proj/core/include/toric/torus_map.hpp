#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Explicit toric structure on S^2 x S^2 minus the antidiagonal, the map
// Phi : E(4pi, 8pi)° -> S^2 x S^2 \ Q and the square embedding built from it.
//
// Conventions. Complex coordinates (w, z) are stored as they appear in the
// formulas, so the moment map pi|.|^2 gives capacity pi|w|^2; the ellipsoid
// E(4pi, 8pi)° is 2|w|^2 + |z|^2 < 8 and the polydisk P(2pi c, 2pi c) is
// |w|^2 <= 2c, |z|^2 <= 2c. S^2 is the unit sphere in R^3, identified with
// C x R via (v1 + i v2, v3).
namespace toric::torus {

using Complex = std::complex<double>;

struct Tolerances {
  double unit_norm = 1e-12;
  double agreement = 1e-9;
  double symplectic = 1e-6;
  double fd_step = 1e-5;
};

struct SpherePoint {
  double v1 = 0, v2 = 0, v3 = 1;

  static SpherePoint from_planar(Complex z, double v3) { return {z.real(), z.imag(), v3}; }
  Complex planar() const { return {v1, v2}; }
  double norm_residual() const;
  SpherePoint normalized() const;
};

struct SpherePair {
  SpherePoint v, w;
};

struct C2Point {
  Complex w, z;
};

double distance(const SpherePoint& a, const SpherePoint& b);
double distance(const SpherePair& a, const SpherePair& b);

// Capacity <-> radius for the pi|.|^2 moment map.
double capacity_of_radius(double r);
double radius_of_capacity(double capacity);

double F1(const SpherePair& p);  // v3 + w3
double F2(const SpherePair& p);  // |v + w|
std::array<double, 2> J_map(const SpherePair& p);

SpherePair flow_F1(double t, const SpherePair& p);
// Throws DomainError within 1e-9 of the antidiagonal.
SpherePair flow_F2(double t, const SpherePair& p);

// Lagrangian section of J over {x/2 + y/4 < 1, x, y >= 0}.
SpherePair section_s(double x, double y);

bool in_phi_domain(const C2Point& p);  // 2|w|^2 + |z|^2 < 8
SpherePair phi_flow(const C2Point& p);
// Closed form; throws DomainError when |w|^2 > 4 - 1e-9.
SpherePair phi_closed(const C2Point& p);

// Stereographic-type symplectomorphism S^2 minus the south pole -> open disk of radius 2.
Complex sigma_map(const SpherePoint& v);
SpherePoint sigma_inverse(Complex zeta);

// G_i = F_i o (sigma x sigma)^{-1} on P(4pi, 4pi)°.
double G1(const C2Point& p);
double G2(const C2Point& p);

// Whether (|w|^2/2, |z|^2/2) lies strictly below y = x^2/2 - 3x + 4.
bool parabola_safe(const C2Point& p);

// (sigma x sigma) o Phi on P(2pi c, 2pi c). Requires 1 < c < 4 - 2 sqrt 2, the
// input in the polydisk and parabola-safe.
C2Point embed_square(double c, const C2Point& p);
// Same composition with no hypothesis checks; empty if Phi(p) meets the pole locus.
std::optional<C2Point> sigma_phi(const C2Point& p);

// max |M^T Omega0 M - Omega0| for the central-difference Jacobian of sigma_phi at p.
double symplectic_residual(const C2Point& p, double h);

struct PhiVerifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double max_unit_norm = 0;   // over both formulas
  double max_moment = 0;      // |J o phi_flow - (|w|^2/2, |z|^2/2)|
  double max_agreement = 0;   // |phi_flow - phi_closed|
  double max_flow_conservation = 0;  // F1, F2 and J along random flow times
  bool pass(const Tolerances& tol) const;
};

PhiVerifyReport verify_phi(std::size_t samples, std::uint64_t seed, const Tolerances& tol = {},
                           unsigned workers = 1);

struct SquareRow {
  C2Point input;
  C2Point output;
  double margin = 0;  // 2 - max(|w'|, |z'|); negative or NaN when not contained
  double image_residual = 0;  // violation of the image description, 0 when satisfied
  bool parabola_safe = true;
};

struct SquareReport {
  double c = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool in_proven_window = false;  // 1 < c < 4 - 2 sqrt 2
  std::size_t contained = 0;
  std::size_t parabola_unsafe = 0;
  std::size_t image_description_failures = 0;
  double min_margin = 0;
  std::size_t symplectic_samples = 0;
  double max_symplectic_residual = 0;
  // For c past the window: a point of the square sent onto the pole locus.
  std::optional<C2Point> pole_witness;
  double pole_witness_distance = 0;
  std::vector<SquareRow> rows;  // only when requested

  std::size_t containment_failures() const { return samples - contained; }
};

SquareReport square_report(double c, std::size_t samples, std::uint64_t seed,
                           const Tolerances& tol = {}, std::size_t symplectic_samples = 1000,
                           bool keep_rows = false, unsigned workers = 1);

std::string csv_header();
std::string csv_row(const SquareRow& row);

}  // namespace toric::torus
