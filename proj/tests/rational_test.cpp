#include <doctest.h>

#include <random>

#include "cgames/cost_function.hpp"
#include "cgames/rational.hpp"

using namespace cgames;

TEST_CASE("rational parsing accepts fractions, integers, and decimals") {
  CHECK(parse_rational("3/7") == Rational(3) / 7);
  CHECK(parse_rational("-1/2") == Rational(-1) / 2);
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("1.054") == Rational(1054) / 1000);
  CHECK(parse_rational("-0.25") == Rational(-1) / 4);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("fraction strings round-trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational q = Rational(static_cast<long>(rng() % 2000) - 1000) /
                 Rational(static_cast<long>(rng() % 999) + 1);
    CHECK(parse_rational(to_fraction_string(q)) == q);
  }
}

TEST_CASE("decimal strings truncate toward zero") {
  CHECK(to_decimal_string(Rational(1) / 3, 6) == "0.333333");
  CHECK(to_decimal_string(Rational(-1) / 3, 6) == "-0.333333");
  CHECK(to_decimal_string(Rational(5) / 2, 3) == "2.500");
}

TEST_CASE("pow_rational") {
  CHECK(pow_rational(Rational(2) / 3, 3) == Rational(8) / 27);
  CHECK(pow_rational(Rational(5), 0) == Rational(1));
  CHECK(pow_rational(Rational(0), 4) == Rational(0));
}

TEST_CASE("dyadic rounding brackets the value") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Rational q = Rational(static_cast<long>(rng() % 20001) - 10000) /
                 Rational(static_cast<long>(rng() % 997) + 1);
    Rational lo = dyadic_floor(q, 16), hi = dyadic_ceil(q, 16);
    CHECK(lo <= q);
    CHECK(q <= hi);
    CHECK(hi - lo <= Rational(2) / 65536);
  }
  CHECK(dyadic_floor(Rational(3) / 4, 2) == Rational(3) / 4);
}

TEST_CASE("factor ordering with infinity") {
  Factor two{Rational(2)}, three{Rational(3)}, inf = Factor::infinity();
  CHECK(two < three);
  CHECK(three < inf);
  CHECK(!(inf < inf));
  CHECK(inf == Factor::infinity());
  CHECK(inf > Rational(1000000));
  CHECK(two <= Rational(2));
  CHECK(inf.str() == "inf");
  CHECK(two.str() == "2/1");
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("polynomial evaluation is exact") {
  auto c = CostFunction::polynomial({Rational(1), Rational(0), Rational(2)});  // 1 + 2x^2
  CHECK(c(Rational(1) / 2) == Rational(3) / 2);
  CHECK(c(Rational(0)) == Rational(1));
  CHECK(CostFunction::monomial(Rational(3), 2)(Rational(2)) == Rational(12));
  CHECK_THROWS_AS(CostFunction::polynomial({Rational(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(CostFunction::polynomial({}), std::invalid_argument);
}

TEST_CASE("step evaluation applies values at closed thresholds") {
  auto c = CostFunction::step({{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
  CHECK(c(Rational(1) / 2) == Rational(0));
  CHECK(c(Rational(1)) == Rational(2));  // value applies when x >= threshold
  CHECK(c(Rational(2)) == Rational(2));
  CHECK(c(Rational(3)) == Rational(5));
  CHECK(c(Rational(100)) == Rational(5));
  CHECK_THROWS_AS(CostFunction::step({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CostFunction::step({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}),
                  std::invalid_argument);
}

TEST_CASE("cost functions are nondecreasing on positive loads") {
  std::mt19937_64 rng(13);
  auto random_rational = [&] {
    return Rational(static_cast<long>(rng() % 4000) + 1) /
           Rational(static_cast<long>(rng() % 100) + 1);
  };
  std::vector<CostFunction> fns;
  fns.push_back(CostFunction::polynomial({Rational(1) / 3, Rational(2), Rational(0), Rational(5)}));
  fns.push_back(CostFunction::monomial(Rational(7) / 2, 4));
  fns.push_back(CostFunction::step(
      {{Rational(1) / 2, Rational(1) / 3}, {Rational(2), Rational(2)}, {Rational(5), Rational(2)}}));
  for (const auto& f : fns) {
    for (int i = 0; i < 200; ++i) {
      Rational x = random_rational(), y = random_rational();
      if (x > y) std::swap(x, y);
      CHECK(f(x) <= f(y));
    }
  }
}
