#include "cgames/rational.hpp"

#include <cctype>

namespace cgames {

Rational pow_rational(const Rational& base, unsigned exp) {
  if (exp == 0) return Rational(1);
  Int n = pow(num(base), exp);
  Int d = pow(den(base), exp);
  Rational r;
  mpq_set_num(r.backend().data(), n.backend().data());
  mpq_set_den(r.backend().data(), d.backend().data());
  // num/den were coprime, so their powers are too; no canonicalize needed.
  return r;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// GMP treats a leading zero as an octal prefix; strip it so "054" means 54.
Int parse_int_token(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
  Int value{std::string(s)};
  return negative ? Int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (!valid_integer_token(ns) || !valid_integer_token(ds)) fail();
    Int n = parse_int_token(ns), d = parse_int_token(ds);
    if (d == 0) fail();
    return Rational(n) / Rational(d);
  }

  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto is = text.substr(0, dot), fs = text.substr(dot + 1);
    if (is.empty() || fs.empty() || !valid_integer_token(is)) fail();
    for (char c : fs)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    bool negative = is[0] == '-';
    Int ipart = parse_int_token(is);
    Int fpart = parse_int_token(fs);
    Int scale = pow(Int(10), static_cast<unsigned>(fs.size()));
    Rational frac = Rational(fpart) / Rational(scale);
    return negative ? Rational(ipart) - frac : Rational(ipart) + frac;
  }

  if (!valid_integer_token(text)) fail();
  return Rational(parse_int_token(text));
}

std::string to_fraction_string(const Rational& q) {
  return num(q).str() + "/" + den(q).str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  bool negative = q < 0;
  Rational a = negative ? Rational(-q) : q;
  Int ip = num(a) / den(a);
  Rational frac = a - Rational(ip);
  Int scaled = (num(frac) * pow(Int(10), static_cast<unsigned>(digits))) / den(frac);
  std::string fs = scaled.str();
  if (static_cast<int>(fs.size()) < digits) fs.insert(0, digits - fs.size(), '0');
  std::string out = ip.str() + "." + fs;
  return negative ? "-" + out : out;
}

Rational dyadic_floor(const Rational& x, unsigned bits) {
  Int n = num(x) << bits;
  const Int d = den(x);  // always > 0 in canonical form
  Int q = n / d;         // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return Rational(q) / Rational(Int(1) << bits);
}

Rational dyadic_ceil(const Rational& x, unsigned bits) {
  return -dyadic_floor(-x, bits);
}

}  // namespace cgames
