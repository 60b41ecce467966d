#include <doctest.h>

#include <random>

#include "cgames/gadget_poly.hpp"
#include "cgames/oracle.hpp"

using namespace cgames;

namespace {

Rational dec(const char* s) { return parse_rational(s); }

SearchConfig quick_config() {
  SearchConfig config;
  config.grid = 32;
  config.n_floor = 8;
  config.n_patience = 8;
  config.refine_top = 4;
  return config;
}

}  // namespace

TEST_CASE("build_gadget shapes the game as specified") {
  Game g = build_gadget({2, 1, 1, Rational(1), Rational(1)});
  CHECK(g.num_players() == 2);
  CHECK(g.num_resources() == 4);
  for (const auto& p : g.players()) CHECK(p.strategies.size() == 2);

  // load on a_0 with the heavy player and every light player on the a side
  Game big = build_gadget({3, 3, 2, Rational(1, 4), Rational(1, 2)});
  StrategyProfile all_a(4, 0);
  CHECK(load(big, all_a, big.resource_index("a_0")) == 1 + 3 * Rational(1, 4));
  CHECK_THROWS_AS(build_gadget({2, 1, 3, Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(build_gadget({2, 1, 1, Rational(0), Rational(1)}), std::invalid_argument);
}

TEST_CASE("case_ratios on hand-evaluated points") {
  auto [r1, r2] = case_ratios({2, 1, 1, Rational(1), Rational(1)});
  CHECK(r1 == Rational(5) / 3);
  CHECK(r2 == Rational(3) / 5);

  auto [s1, s2] = case_ratios({2, 1, 1, Rational(1), Rational(0)});
  CHECK(s1 == Rational(1) / 2);
  CHECK(s2 == Rational(2));

  CHECK_THROWS_AS(case_ratios({2, 1, 1, Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("oracle threshold dominates min(case_ratios)") {
  std::mt19937_64 rng(407);
  for (int trial = 0; trial < 12; ++trial) {
    GadgetParams p;
    p.d = 2 + static_cast<int>(rng() % 2);
    p.n = 1 + static_cast<int>(rng() % 3);
    p.k = 1 + static_cast<int>(rng() % p.d);
    p.w = Rational(1 + static_cast<long>(rng() % 8), 8);
    p.beta = Rational(1 + static_cast<long>(rng() % 8), 8);
    auto [r1, r2] = case_ratios(p);
    Rational bound = std::min(r1, r2);
    ThresholdReport report = nonexistence_threshold(build_gadget(p));
    REQUIRE(!report.threshold.is_infinite());
    CHECK(report.threshold.value() >= bound);
    // no alpha-PNE strictly below the bound
    if (bound > 1) {
      Rational below = 1 + (bound - 1) * Rational(99, 100);
      CHECK(enumerate_pne(build_gadget(p), below).count() == 0);
    }
  }
}

TEST_CASE("optimizer reproduces the degree-2 frontier value") {
  FrontierPoint p = optimize_alpha(2, quick_config());
  CHECK(p.argmax.n == 1);
  CHECK(p.alpha_lower > dec("1.054014179") - dec("0.001"));
  CHECK(p.alpha_lower < dec("1.054014180"));
  auto [r1, r2] = case_ratios(p.argmax);
  CHECK(std::min(r1, r2) == p.alpha_lower);
  CHECK(p.stats.evaluations > 0);
}

TEST_CASE("optimizer threshold cross-check at the degree-2 argmax") {
  FrontierPoint p = optimize_alpha(2, quick_config());
  ThresholdReport report = nonexistence_threshold(build_gadget(p.argmax));
  REQUIRE(!report.threshold.is_infinite());
  CHECK(report.threshold.value() >= p.alpha_lower);
  CHECK(report.threshold.value() - p.alpha_lower < Rational(1, 1000));
}

TEST_CASE("n_max heuristic is sane") {
  CHECK(n_max_heuristic(2) >= 4);
  CHECK(n_max_heuristic(100) >= 100);
  CHECK(n_max_heuristic(100) < 2000);
}

TEST_CASE("asymptotic parameter choice") {
  GadgetParams p16 = asymptotic_params(16);
  CHECK(p16.k == 2);  // ceil(ln 16 / (2 ln ln 16)) = ceil(1.359...) = 2

  GadgetParams p1000 = asymptotic_params(1000);
  CHECK(p1000.k >= 1);
  CHECK(p1000.k <= 1000);
  CHECK(p1000.w > 0);
  CHECK(p1000.w <= 1);
  CHECK(p1000.beta > 0);
  CHECK(p1000.beta <= 1);
  CHECK(p1000.n >= 1);
  CHECK_THROWS_AS(asymptotic_params(3), std::invalid_argument);
}

TEST_CASE("asymptotic choice certifies the ratio bounds at d = 10^4") {
  const int d = 10000;
  GadgetParams p = asymptotic_params(d);
  IntervalContext ctx(256);
  Enclosure dd = ctx.from_int(d);
  Enclosure L = ctx.ln(dd);
  Enclosure sqrt_d = ctx.sqrt(dd);

  // numerator bound: 1 + n beta (1+w)^d >= 2 sqrt(d)/ln d
  Enclosure opw_d = ctx.exp(ctx.mul(dd, ctx.ln(ctx.from(1 + p.w))));
  Enclosure numerator =
      ctx.add(ctx.from_int(1), ctx.mul(ctx.mul(ctx.from_int(p.n), ctx.from(p.beta)), opw_d));
  Enclosure rhs = ctx.div(ctx.mul(ctx.from_int(2), sqrt_d), L);
  CHECK(numerator.lo >= rhs.hi);

  // full first ratio clears sqrt(d)/(2 ln d)
  Rational denominator = pow_rational(1 + Rational(p.n) * p.w, p.k) + Rational(p.n) * p.beta;
  Enclosure r1 = ctx.div(numerator, ctx.from(denominator));
  Enclosure target = ctx.div(sqrt_d, ctx.mul(ctx.from_int(2), L));
  CHECK(r1.lo >= target.hi);
}

TEST_CASE("appendix sequence enclosures") {
  Enclosure g100 = appendix_g(100);
  Enclosure g1000 = appendix_g(1000);
  Enclosure g1e6 = appendix_g(1000000);
  for (const auto& g : {g100, g1000, g1e6}) {
    CHECK(g.width() <= Rational(1, 1000000));
    CHECK(g.lo > Rational(1));
    CHECK(g.hi < Rational(4));
  }
  CHECK(g1e6.hi < g1000.lo);  // g(10^6) < g(10^3)
  // spot values: g(100) ~ 2.5896, g(1000) ~ 2.0240
  CHECK(g100.lo > dec("2.58"));
  CHECK(g100.hi < dec("2.60"));
  CHECK(g1000.lo > dec("2.02"));
  CHECK(g1000.hi < dec("2.03"));
}
