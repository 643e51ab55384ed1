#include "toric/rational.hpp"

#include <cmath>
#include <ostream>

#include "toric/errors.hpp"

namespace toric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = mpq_class(mpz_class(std::string(ip) + std::string(fp), 10), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  if (auto r = try_parse(text)) return *r;
  throw InvalidArgument("not a rational: '" + std::string(text) + "'");
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite double");
  return Rational(mpq_class(v));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Quantity Quantity::real(double value, double error_bar) {
  Quantity q;
  q.value_ = value;
  q.error_bar_ = error_bar;
  return q;
}

const Rational& Quantity::rational() const {
  if (!exact_) throw InvalidArgument("quantity has no exact form");
  return *exact_;
}

Comparison compare(const Quantity& a, const Quantity& b, double margin) {
  if (a.is_exact() && b.is_exact()) {
    auto c = a.rational() <=> b.rational();
    if (c < 0) return Comparison::Less;
    if (c > 0) return Comparison::Greater;
    return Comparison::Equal;
  }
  double slack = margin + a.error_bar() + b.error_bar();
  double d = a.value() - b.value();
  if (std::abs(d) <= slack) return Comparison::Indeterminate;
  return d < 0 ? Comparison::Less : Comparison::Greater;
}

Quantity min(const Quantity& a, const Quantity& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() <= b.rational() ? a : b;
  return a.value() <= b.value() ? a : b;
}

Quantity operator/(const Quantity& a, const Quantity& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() / b.rational();
  double v = a.value() / b.value();
  double err = (a.error_bar() + std::abs(v) * b.error_bar()) / std::abs(b.value());
  return Quantity::real(v, err + std::abs(v) * 1e-15);
}

}  // namespace toric
