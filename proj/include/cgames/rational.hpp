#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cgames {

// All game quantities (weights, coefficients, loads, costs, alpha, ...) are
// exact rationals. Comparisons must never go through floating point.
// Expression templates are off: these behave as plain value types, so
// std::min/max and ternaries work without surprises.
using Int =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

Rational pow_rational(const Rational& base, unsigned exp);

// Accepts "p/q", "p", and finite decimals like "1.054"; always exact.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

// Decimal expansion truncated toward zero after `digits` fractional digits.
// Display only; never feeds back into any decision.
std::string to_decimal_string(const Rational& q, int digits);

// Largest (resp. smallest) multiple of 2^-bits that is <= x (resp. >= x).
Rational dyadic_floor(const Rational& x, unsigned bits);
Rational dyadic_ceil(const Rational& x, unsigned bits);

// An improvement factor: a nonnegative rational or +infinity. The infinite
// case arises when a deviation has cost 0 while the current strategy does not.
class Factor {
 public:
  Factor() : value_(1) {}
  explicit Factor(Rational v) : value_(std::move(v)) {}
  static Factor infinity() {
    Factor f;
    f.infinite_ = true;
    return f;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::logic_error("Factor: value() on infinity");
    return value_;
  }

  friend bool operator==(const Factor& a, const Factor& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator<(const Factor& a, const Factor& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Factor& a, const Factor& b) { return a < b || a == b; }
  friend bool operator>(const Factor& a, const Factor& b) { return b < a; }
  friend bool operator>=(const Factor& a, const Factor& b) { return b <= a; }

  friend bool operator<=(const Factor& a, const Rational& q) { return !a.infinite_ && a.value_ <= q; }
  friend bool operator>(const Factor& a, const Rational& q) { return a.infinite_ || a.value_ > q; }
  friend bool operator<(const Rational& q, const Factor& a) { return a > q; }

  std::string str() const { return infinite_ ? "inf" : to_fraction_string(value_); }

 private:
  Rational value_;
  bool infinite_ = false;
};

}  // namespace cgames
