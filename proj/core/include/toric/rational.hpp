#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace toric {

// Exact fraction in lowest terms; thin value wrapper over mpq_class so that
// expression templates never leak into `auto` declarations.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(mpq_class q);
  explicit Rational(const mpz_class& n) : q_(n) {}

  // Accepts "p/q", "-p", and finite decimals such as "1.25" (read exactly).
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);
  // Exact binary value of a finite double.
  static Rational from_double(double v);

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  const mpq_class& mpq() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  mpz_class floor() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// A value that is either exact or a double with an error bar.
class Quantity {
 public:
  Quantity(const Rational& r) : exact_(r), value_(r.to_double()) {}  // NOLINT(implicit)
  static Quantity real(double value, double error_bar);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& rational() const;
  double value() const { return value_; }
  double error_bar() const { return error_bar_; }

 private:
  Quantity() = default;
  std::optional<Rational> exact_;
  double value_ = 0.0;
  double error_bar_ = 0.0;
};

enum class Comparison { Less, Equal, Greater, Indeterminate };

// Exact when both sides are exact; otherwise differences within `margin`
// (plus the error bars) are Indeterminate.
Comparison compare(const Quantity& a, const Quantity& b, double margin);

Quantity min(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, const Quantity& b);

}  // namespace toric
