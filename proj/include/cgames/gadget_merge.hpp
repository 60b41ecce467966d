#pragma once

#include <vector>

#include "cgames/gadget_circuit.hpp"
#include "cgames/oracle.hpp"

namespace cgames {

// Structural normal form of a polynomial game: no empty strategies, no
// zero-weight players, every resource a monomial a_e x^(k_e) with a_e > 0 and
// 1 <= k_e <= d. Player costs on corresponding profiles are unchanged.
struct NormStats {
  Rational a_min;  // min_e a_e
  Rational W;      // sum of weights
  Rational c_max;  // sum_e c_e(W), a bound on any player's cost
};

struct NormalizedGame {
  Game game;
  std::vector<Rational> coefficient;  // a_e per resource
  std::vector<int> exponent;          // k_e per resource
  NormStats stats;
  std::vector<std::string> removed_players;  // dropped by the transformations
};

NormalizedGame normalize(const Game& game, int d);

// a_e -> gamma^(d+1-k_e) a_e, w_i -> gamma w_i; player costs scale by
// gamma^(d+1) uniformly, so equilibria are preserved.
NormalizedGame rescale(const NormalizedGame& ng, const Rational& gamma);

// Largest convenient gamma satisfying the three merge constraints strictly:
//   gamma W < 1,
//   gamma sum_e a_e < mu/(mu-1) (3/2)^d,
//   gamma alpha^2 < a_min / c_max.
Rational choose_gamma(const NormStats& stats, const Rational& coeff_sum,
                      const Rational& alpha_bar, const Rational& mu, int d);

struct MergedGame {
  Game game;
  CircuitGame circuit_part;  // the unmerged circuit game (player/resource ids match)
  Rational gamma;
  Rational alpha;      // target approximation factor
  Rational alpha_bar;  // rational witness strictly between alpha and threshold(core)

  // circuit players occupy indices [0, num_circuit_players); core players follow
  int num_circuit_players = 0;
  std::vector<int> core_players;
  std::vector<int> core_dummy_strategy;  // dummy strategy index per core player
  int dummy_resource = -1;
  int output_player = -1;
};

// Splices the lockable circuit game onto a rescaled copy of a game without
// alpha-bar-PNE. The resulting game's alpha-PNE (equivalently, exact PNE) are
// in bijection with the satisfying assignments of the circuit.
MergedGame merge_games(const Circuit& circuit, int d, const Rational& alpha, const Game& core,
                       const OracleConfig& oracle = {});

struct ParsimonyReport {
  std::uint64_t sat_count = 0;
  std::uint64_t pne_count = 0;
  bool bijection = false;  // PNE set == image of the satisfying assignments
};

// Exhaustive bijection check between satisfying assignments and alpha-PNE.
ParsimonyReport verify_parsimony(const MergedGame& merged, const Rational& alpha,
                                 const OracleConfig& oracle = {});

// The unique equilibrium profile for a satisfying assignment: circuit players
// follow the NAND semantics, the output player adds the core resources, and
// every core player sits on her dummy strategy.
StrategyProfile merged_profile(const MergedGame& merged, const Assignment& x);

}  // namespace cgames
