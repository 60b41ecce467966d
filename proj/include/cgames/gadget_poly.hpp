#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cgames/enclosure.hpp"
#include "cgames/game.hpp"

namespace cgames {

// The degree-d nonexistence family: a heavy player of weight 1 and n light
// players of weight w on 2(n+1) resources, with c0(x) = x^k on a_0/b_0 and
// c1(x) = beta x^d elsewhere.
struct GadgetParams {
  int d = 2;
  int n = 1;
  int k = 1;
  Rational w = 1;
  Rational beta = 1;
};

Game build_gadget(const GadgetParams& p);

// The two improvement-factor lower bounds from the case analysis:
//   r1 = (1 + n b (1+w)^d) / ((1+nw)^k + n b)      heavy player alone on a_0
//   r2 = ((1+w)^k + b w^d) / ((nw)^k + b (1+w)^d)  heavy player sharing a_0
// The game has no alpha-PNE for any alpha < min(r1, r2).
std::pair<Rational, Rational> case_ratios(const GadgetParams& p);

struct SearchStats {
  std::uint64_t cells = 0;
  std::uint64_t evaluations = 0;
};

struct FrontierPoint {
  int d;
  Rational alpha_lower;  // exact min(r1, r2) at argmax; certified lower bound
  GadgetParams argmax;
  SearchStats stats;
};

struct SearchConfig {
  int grid = 64;        // grid points per axis for the (w, beta) scan
  int n_patience = 16;  // consecutive non-improving n before a k-column stops
  int n_floor = 24;     // never stop a k-column before this many n values
  int refine_top = 8;   // how many best cells get coordinate refinement
  Rational tolerance = Rational(1, 1000000000);  // w-bracket width target
  int workers = 1;
  std::optional<int> n_max_override;

  static SearchConfig coarse() {
    SearchConfig c;
    c.grid = 24;
    c.n_patience = 12;
    c.n_floor = 16;
    c.refine_top = 12;
    return c;
  }
};

// Maximizes min(r1, r2) over k in 1..d, n up to the heuristic cap
// ceil(4 sqrt(d) d / ln d), and (w, beta) by log-spaced grid plus coordinate
// refinement. Every iterate is rational, so the result is an exact value of
// the objective at a feasible point.
FrontierPoint optimize_alpha(int d, const SearchConfig& config = {});

int n_max_heuristic(int d);

// The parameter choice that yields the sqrt(d)/(2 ln d) bound, with every
// irrational formula replaced by a nearby dyadic rational (k and n resolved
// exactly from certified enclosures). Requires d >= 4.
GadgetParams asymptotic_params(int d);

// Certified enclosure of
//   g(d) = (1 + d^(-1/(2(k+1))))^k + 2 sqrt(d) / (ln d (1 + ln d/(2d))^d)
// with k = ceil(ln d / (2 ln ln d)); width <= 1e-6. Requires d >= 3.
Enclosure appendix_g(int d);

}  // namespace cgames
