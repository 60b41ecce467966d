#pragma once

#include <optional>

#include "cgames/rational.hpp"

namespace cgames {

// A pair of rationals provably bracketing a real number. All arithmetic on
// enclosures rounds outward to dyadic rationals, so widths stay controlled
// and every comparison against a rational is a certificate.
struct Enclosure {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool certainly_lt(const Rational& q) const { return hi < q; }
  bool certainly_gt(const Rational& q) const { return lo > q; }
  bool certainly_lt(const Enclosure& other) const { return hi < other.lo; }
};

// Arithmetic at a fixed working precision (fractional bits of the dyadic
// grid used for outward rounding). Transcendental functions evaluate series
// with explicit remainder bounds; monotonicity carries interval endpoints.
class IntervalContext {
 public:
  explicit IntervalContext(unsigned bits = 192) : bits_(bits) {}
  unsigned bits() const { return bits_; }

  Enclosure from(const Rational& q) const { return {q, q}; }
  Enclosure from_int(long v) const { return from(Rational(v)); }
  Enclosure round(const Enclosure& e) const;

  Enclosure add(const Enclosure& a, const Enclosure& b) const;
  Enclosure sub(const Enclosure& a, const Enclosure& b) const;
  Enclosure mul(const Enclosure& a, const Enclosure& b) const;
  Enclosure div(const Enclosure& a, const Enclosure& b) const;  // b must not contain 0
  Enclosure neg(const Enclosure& a) const { return {-a.hi, -a.lo}; }
  Enclosure inv(const Enclosure& a) const;
  Enclosure pow(const Enclosure& a, unsigned k) const;  // requires a.lo >= 0

  Enclosure sqrt(const Enclosure& a) const;  // requires a.lo >= 0
  Enclosure ln(const Enclosure& a) const;    // requires a.lo > 0
  Enclosure exp(const Enclosure& a) const;

  // Integer part when the enclosure pins it down uniquely.
  std::optional<Int> floor(const Enclosure& a) const;
  std::optional<Int> ceil(const Enclosure& a) const;

 private:
  Enclosure atanh_nonneg(const Rational& z) const;  // series, 0 <= z < 1
  Enclosure ln_rational(const Rational& x) const;
  Enclosure exp_rational(const Rational& x) const;
  Enclosure ln2() const;
  unsigned bits_;
};

// Directed rational bounds of sqrt(x) on a dyadic grid with `bits`
// fractional bits; exact when x is a perfect square of the grid.
Enclosure sqrt_rational(const Rational& x, unsigned bits);

// Certified bounds of 3^(d/2): exact for even d, via sqrt(3) for odd d.
Enclosure pow3_half(int d);

}  // namespace cgames
