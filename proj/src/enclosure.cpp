#include "cgames/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgames {

namespace {

Rational pow2_neg(unsigned bits) { return Rational(1) / Rational(Int(1) << bits); }

void check_order(const Enclosure& e) {
  if (e.lo > e.hi) throw std::logic_error("enclosure endpoints out of order");
}

}  // namespace

Enclosure IntervalContext::round(const Enclosure& e) const {
  check_order(e);
  return {dyadic_floor(e.lo, bits_), dyadic_ceil(e.hi, bits_)};
}

Enclosure IntervalContext::add(const Enclosure& a, const Enclosure& b) const {
  return round({a.lo + b.lo, a.hi + b.hi});
}

Enclosure IntervalContext::sub(const Enclosure& a, const Enclosure& b) const {
  return round({a.lo - b.hi, a.hi - b.lo});
}

Enclosure IntervalContext::mul(const Enclosure& a, const Enclosure& b) const {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return round({lo, hi});
}

Enclosure IntervalContext::inv(const Enclosure& a) const {
  if (a.lo <= 0 && a.hi >= 0) throw std::domain_error("enclosure inverse across zero");
  return round({Rational(1) / a.hi, Rational(1) / a.lo});
}

Enclosure IntervalContext::div(const Enclosure& a, const Enclosure& b) const {
  return mul(a, inv(b));
}

Enclosure IntervalContext::pow(const Enclosure& a, unsigned k) const {
  if (a.lo < 0) throw std::domain_error("enclosure pow needs nonnegative base");
  if (k == 0) return from(Rational(1));
  // monotone on nonnegative bases; round once at the end
  return round({pow_rational(a.lo, k), pow_rational(a.hi, k)});
}

Enclosure IntervalContext::sqrt(const Enclosure& a) const {
  if (a.lo < 0) throw std::domain_error("enclosure sqrt of negative");
  Enclosure lo = sqrt_rational(a.lo, bits_), hi = sqrt_rational(a.hi, bits_);
  return {lo.lo, hi.hi};
}

Enclosure IntervalContext::ln(const Enclosure& a) const {
  if (a.lo <= 0) throw std::domain_error("enclosure ln needs positive argument");
  return {ln_rational(a.lo).lo, ln_rational(a.hi).hi};
}

Enclosure IntervalContext::exp(const Enclosure& a) const {
  return {exp_rational(a.lo).lo, exp_rational(a.hi).hi};
}

std::optional<Int> IntervalContext::floor(const Enclosure& a) const {
  Int fl = num(dyadic_floor(a.lo, 0)), fh = num(dyadic_floor(a.hi, 0));
  if (fl == fh) return fl;
  return std::nullopt;
}

std::optional<Int> IntervalContext::ceil(const Enclosure& a) const {
  Int cl = num(dyadic_ceil(a.lo, 0)), ch = num(dyadic_ceil(a.hi, 0));
  if (cl == ch) return cl;
  return std::nullopt;
}

// atanh(z) = sum z^(2i+1)/(2i+1); tail after N terms is bounded by
// z^(2N+1) / ((2N+1) (1 - z^2)). The series runs at elevated precision so the
// rounding grid sits well below the termination threshold.
Enclosure IntervalContext::atanh_nonneg(const Rational& z) const {
  if (z < 0 || z >= 1) throw std::domain_error("atanh series needs 0 <= z < 1");
  if (z == 0) return from(Rational(0));
  IntervalContext work(bits_ + 32);
  const Rational eps = pow2_neg(bits_ + 8);
  Enclosure zi = work.round({z, z});
  Enclosure z2 = work.mul(zi, zi);
  Enclosure term = zi;  // z^(2i+1)
  Enclosure sum = term;
  unsigned i = 1;
  while (true) {
    term = work.mul(term, z2);
    Enclosure contrib = work.div(term, work.from_int(2 * i + 1));
    sum = work.add(sum, contrib);
    if (contrib.hi < eps) break;
    ++i;
  }
  Enclosure next = work.mul(term, z2);
  Rational tail_hi =
      dyadic_ceil(next.hi / (Rational(2 * i + 3) * (Rational(1) - z2.hi)), bits_ + 8);
  return {sum.lo, sum.hi + tail_hi};
}

Enclosure IntervalContext::ln2() const {
  Enclosure at = atanh_nonneg(Rational(1) / 3);
  return {at.lo * 2, at.hi * 2};
}

Enclosure IntervalContext::ln_rational(const Rational& x) const {
  if (x <= 0) throw std::domain_error("ln of nonpositive rational");
  long k = 0;
  Rational m = x;
  while (m > Rational(3) / 2) {
    m /= 2;
    ++k;
  }
  while (m < Rational(3) / 4) {
    m *= 2;
    --k;
  }
  Rational z = (m - 1) / (m + 1);
  Enclosure at = z >= 0 ? atanh_nonneg(z) : neg(atanh_nonneg(-z));
  Enclosure core{at.lo * 2, at.hi * 2};
  if (k == 0) return core;
  Enclosure l2 = ln2();
  Enclosure scaled = k > 0 ? Enclosure{l2.lo * k, l2.hi * k} : Enclosure{l2.hi * k, l2.lo * k};
  return add(core, scaled);
}

Enclosure IntervalContext::exp_rational(const Rational& x) const {
  if (x == 0) return from(Rational(1));
  if (x < 0) {
    Enclosure pos = exp_rational(-x);
    return round({Rational(1) / pos.hi, Rational(1) / pos.lo});
  }
  if (x > 1 << 20) throw std::domain_error("exp argument too large");

  unsigned halvings = 0;
  Rational y = x;
  while (y > Rational(1) / 2) {
    y /= 2;
    ++halvings;
  }
  // each squaring roughly doubles the relative error, so work well below target
  IntervalContext work(bits_ + 2 * halvings + 32);
  const Rational eps = pow2_neg(bits_ + 2 * halvings + 8);
  Enclosure yi = work.round({y, y});
  Enclosure term = from(Rational(1));
  Enclosure sum = term;
  unsigned i = 1;
  while (true) {
    term = work.div(work.mul(term, yi), work.from_int(i));
    sum = work.add(sum, term);
    if (term.hi < eps) break;
    ++i;
  }
  // tail <= 2 * next term since y <= 1/2
  Rational tail_hi = dyadic_ceil(term.hi * yi.hi / Rational(i + 1) * 2, bits_ + 8);
  Enclosure result{sum.lo, sum.hi + tail_hi};
  for (unsigned s = 0; s < halvings; ++s) result = work.mul(result, result);
  return result;
}

Enclosure sqrt_rational(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x == 0) return {Rational(0), Rational(0)};
  // s = isqrt(floor(x * 4^bits)); then s/2^bits <= sqrt(x) < (s+1)/2^bits + grid slack
  Int scaled = (num(x) << (2 * bits)) / den(x);
  Int s = sqrt(scaled);
  Rational denom = Rational(Int(1) << bits);
  Rational lo = Rational(s) / denom;
  if (lo * lo == x) return {lo, lo};
  Rational hi = Rational(s + 1) / denom;
  while (hi * hi < x) hi += pow2_neg(bits);  // guards the floor in `scaled`
  return {lo, hi};
}

Enclosure pow3_half(int d) {
  if (d < 0) throw std::domain_error("pow3_half needs d >= 0");
  if (d % 2 == 0) {
    Rational exact(pow(Int(3), static_cast<unsigned>(d / 2)));
    return {exact, exact};
  }
  // 3^(d/2) = 3^((d-1)/2) * sqrt(3), sqrt(3) to ~42 decimal digits
  Enclosure s3 = sqrt_rational(Rational(3), 140);
  Rational base(pow(Int(3), static_cast<unsigned>((d - 1) / 2)));
  return {base * s3.lo, base * s3.hi};
}

}  // namespace cgames
