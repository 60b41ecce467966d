#include <doctest.h>

#include "cgames/enclosure.hpp"

using namespace cgames;

namespace {

Rational dec(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("sqrt enclosures bracket known values") {
  Enclosure s2 = sqrt_rational(Rational(2), 120);
  CHECK(s2.lo * s2.lo <= Rational(2));
  CHECK(s2.hi * s2.hi >= Rational(2));
  CHECK(s2.lo > dec("1.41421356237309"));
  CHECK(s2.hi < dec("1.41421356237310"));
  Enclosure s9 = sqrt_rational(Rational(9), 64);
  CHECK(s9.lo == Rational(3));
  CHECK(s9.hi == Rational(3));
  Enclosure squarter = sqrt_rational(Rational(1) / 4, 64);
  CHECK(squarter.lo == Rational(1) / 2);
}

TEST_CASE("pow3_half is exact for even degrees and tight for odd ones") {
  CHECK(pow3_half(2).lo == Rational(3));
  CHECK(pow3_half(2).hi == Rational(3));
  CHECK(pow3_half(6).lo == Rational(27));
  Enclosure odd = pow3_half(3);  // 3^(3/2) = 5.19615242270663...
  CHECK(odd.lo > dec("5.196152422706631"));
  CHECK(odd.hi < dec("5.196152422706632"));
  Enclosure nine_halves = pow3_half(9);  // 3^(9/2) = 140.29611541307906...
  CHECK(nine_halves.lo > dec("140.29"));
  CHECK(nine_halves.hi < dec("140.30"));
}

TEST_CASE("ln enclosures") {
  IntervalContext ctx(160);
  Enclosure l2 = ctx.ln(ctx.from_int(2));
  CHECK(l2.lo > dec("0.6931471805599453094"));
  CHECK(l2.hi < dec("0.6931471805599453095"));
  Enclosure l10 = ctx.ln(ctx.from_int(10));
  CHECK(l10.lo > dec("2.302585092994045"));
  CHECK(l10.hi < dec("2.302585092994047"));
  Enclosure lhalf = ctx.ln(ctx.from(Rational(1) / 2));
  CHECK(lhalf.hi < dec("-0.69314718055994530"));
  CHECK(lhalf.lo > dec("-0.69314718055994531"));
  // ln(e) would need e; instead check exp/ln inversion on a rational
  Enclosure round_trip = ctx.exp(ctx.ln(ctx.from(Rational(7) / 3)));
  CHECK(round_trip.contains(Rational(7) / 3));
  CHECK(round_trip.width() < Rational(1, 1000000000));
}

TEST_CASE("exp enclosures") {
  IntervalContext ctx(160);
  Enclosure e1 = ctx.exp(ctx.from_int(1));
  CHECK(e1.lo > dec("2.718281828459045235"));
  CHECK(e1.hi < dec("2.718281828459045236"));
  Enclosure e_neg = ctx.exp(ctx.from_int(-1));
  CHECK(e_neg.lo > dec("0.36787944117144232"));
  CHECK(e_neg.hi < dec("0.36787944117144233"));
  Enclosure e7 = ctx.exp(ctx.from(Rational(7)));
  CHECK(e7.lo > dec("1096.6331584284585"));
  CHECK(e7.hi < dec("1096.6331584284586"));
}

TEST_CASE("interval arithmetic stays outward-directed") {
  IntervalContext ctx(96);
  Enclosure a{Rational(1) / 3, Rational(1) / 2};
  Enclosure b{Rational(-1) / 4, Rational(2)};
  Enclosure p = ctx.mul(a, b);
  CHECK(p.lo <= Rational(1) / 3 * Rational(-1) / 4);
  CHECK(p.hi >= Rational(1));
  Enclosure q = ctx.div(ctx.from_int(1), ctx.from(Rational(3)));
  CHECK(q.lo <= Rational(1) / 3);
  CHECK(q.hi >= Rational(1) / 3);
  CHECK(q.width() < Rational(1, 1000000));
  CHECK_THROWS_AS(ctx.inv(Enclosure{Rational(-1), Rational(1)}), std::domain_error);
  CHECK(ctx.pow(ctx.from(Rational(3) / 2), 4).lo == Rational(81) / 16);
}

TEST_CASE("floor and ceil resolve only when unambiguous") {
  IntervalContext ctx(96);
  auto f = ctx.floor(Enclosure{dec("2.2"), dec("2.9")});
  REQUIRE(f.has_value());
  CHECK(*f == 2);
  CHECK(!ctx.floor(Enclosure{dec("1.9"), dec("2.1")}).has_value());
  auto c = ctx.ceil(Enclosure{dec("2.2"), dec("2.9")});
  REQUIRE(c.has_value());
  CHECK(*c == 3);
}
