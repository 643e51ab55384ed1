#include "toric/barcode.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

namespace {

using Chain = FilteredComplex::Chain;

void require_window(const Quantity& lo, const Quantity& hi, const Rational& delta,
                    const std::string& what) {
  if (delta.sign() <= 0) throw InvalidArgument("barcode delta must be > 0");
  double width = hi.value() - lo.value();
  if (hi.is_exact() && lo.is_exact()) {
    if (!(delta * 2 < hi.rational() - lo.rational()))
      throw NoWindow(what + ": no window (need 2*delta < " + (hi.rational() - lo.rational()).str() +
                     ")");
  } else if (!(2 * delta.to_double() < width - hi.error_bar() - lo.error_bar())) {
    throw NoWindow(what + ": no window");
  }
}

Quantity shift(const Quantity& q, const Rational& d) {
  if (q.is_exact()) return q.rational() + d;
  return Quantity::real(q.value() + d.to_double(), q.error_bar());
}

// Two index-(n+1) generators at the axis norms, one index-(n+2) generator at ||(1,1)||*.
BarcodeModel convex_like(const ToricRegion& region, const Rational& delta, DifferentialChoice choice,
                         int n, const std::string& kind) {
  if (!region.is_convex()) throw WrongKind(kind + " barcode model requires a convex region");
  Quantity e10 = support_norm(region, Direction(1, 0));
  Quantity e01 = support_norm(region, Direction(0, 1));
  Quantity e11 = support_norm(region, Direction(1, 1));
  Quantity top = e10.value() >= e01.value() ? e10 : e01;
  require_window(top, e11, delta, kind);
  std::vector<FilteredComplex::Generator> gens{
      {"(1,0)", n + 1, e10.value()},
      {"(0,1)", n + 1, e01.value()},
      {"(1,1)", n + 2, e11.value()},
  };
  std::vector<Chain> d(3);
  if (choice == DifferentialChoice::Default) d[2] = {{0, Rational(1)}, {1, Rational(-1)}};
  BarcodeModel m;
  m.kind = kind;
  m.dimension = n;
  m.degree = n + 1;
  m.window_lo = shift(top, delta);
  m.window_hi = shift(e11, -delta);
  m.window_rank = 2;
  m.complex = FilteredComplex(std::move(gens), std::move(d));
  return m;
}

// n - 1 + 2 * #{(j, m) : m * a_j <= k * a_i}. The j = i term is k exactly;
// computing it as floor(k * a_i / a_i) can round down.
int orbit_index(const std::vector<double>& axes, int i, long k) {
  long idx = static_cast<long>(axes.size()) - 1 + 2 * k;
  for (std::size_t j = 0; j < axes.size(); ++j)
    if (static_cast<int>(j) != i) idx += 2 * static_cast<long>(std::floor(k * axes[i] / axes[j]));
  return static_cast<int>(idx);
}

}  // namespace

BarcodeModel barcode_convex(const ToricRegion& region, const Rational& delta,
                            DifferentialChoice choice) {
  return convex_like(region, delta, choice, 2, "convex");
}

BarcodeModel barcode_concave(const ToricRegion& region, const Rational& delta,
                             DifferentialChoice choice) {
  if (!region.is_concave()) throw WrongKind("concave barcode model requires a concave region");
  Quantity c11 = cosupport(region, Direction(1, 1));
  Quantity c12 = cosupport(region, Direction(1, 2));
  Quantity c21 = cosupport(region, Direction(2, 1));
  Quantity low = min(c12, c21);
  require_window(c11, low, delta, "concave");
  std::vector<FilteredComplex::Generator> gens{
      {"a11", 3, c11.value()},
      {"b11", 4, c11.value()},
      {"c12", 5, c12.value()},
      {"c21", 5, c21.value()},
  };
  std::vector<Chain> d(4);
  if (choice == DifferentialChoice::Default) {
    d[2] = {{1, Rational(1)}};
    d[3] = {{1, Rational(1)}};
  }
  BarcodeModel m;
  m.kind = "concave";
  m.degree = 4;
  m.window_lo = shift(c11, delta);
  m.window_hi = shift(low, -delta);
  m.window_rank = 1;
  m.complex = FilteredComplex(std::move(gens), std::move(d));
  return m;
}

BarcodeModel barcode_product(const ToricRegion& region, const std::vector<Rational>& factors,
                             const Rational& delta, DifferentialChoice choice) {
  if (factors.empty()) throw InvalidArgument("product model needs at least one ellipsoid factor");
  Quantity e11 = support_norm(region, Direction(1, 1));
  for (const auto& b : factors) {
    if (!(b.to_double() > e11.value() + e11.error_bar()))
      throw InvalidArgument("ellipsoid factor " + b.str() +
                            " must exceed the threshold R = ||(1,1)||* = " +
                            (e11.is_exact() ? e11.rational().str() : std::to_string(e11.value())));
  }
  return convex_like(region, delta, choice, 2 + static_cast<int>(factors.size()), "product");
}

std::size_t ellipsoid_orbit_count(const std::vector<double>& axes, int degree, double L) {
  const int n = static_cast<int>(axes.size());
  if (n == 0) throw InvalidArgument("ellipsoid needs at least one axis");
  for (double a : axes)
    if (!(a > 0)) throw InvalidArgument("ellipsoid axes must be > 0");
  std::size_t count = 0;
  for (int i = 0; i < n; ++i) {
    for (long k = 1; k * axes[i] <= L; ++k) {
      if (orbit_index(axes, i, k) == degree) ++count;
    }
  }
  return count;
}

FilteredComplex ellipsoid_complex(const std::vector<double>& axes, double max_action) {
  const int n = static_cast<int>(axes.size());
  std::vector<FilteredComplex::Generator> gens;
  for (int i = 0; i < n; ++i) {
    for (long k = 1; k * axes[i] <= max_action; ++k) {
      gens.push_back({"g" + std::to_string(i) + "^" + std::to_string(k), orbit_index(axes, i, k),
                      k * axes[i]});
    }
  }
  std::vector<Chain> d(gens.size());
  return FilteredComplex(std::move(gens), std::move(d));
}

}  // namespace toric
