#pragma once

#include <random>
#include <string>
#include <vector>

#include "cgames/circuit.hpp"
#include "cgames/game.hpp"

namespace cgames::fixtures {

// 5-gate valid circuit (NOT + NAND); computes x1 OR x2.
//   00 -> 0, 01 -> 1, 10 -> 1, 11 -> 1
inline const char* kFiveGate = R"(
INPUT x1
INPUT x2
NOT g5 x1
NOT g4 x2
NAND g3 g5 g4
NOT g2 g3
NAND g1 g2 g5
OUTPUT g1
)";

// x1 OR x2; 3 satisfying assignments.
inline const char* kOr = R"(
INPUT x1
INPUT x2
NOT n1 x1
NOT n2 x2
NAND out n1 n2
OUTPUT out
)";

// x1 AND x2; 1 satisfying assignment.
inline const char* kAnd = R"(
INPUT x1
INPUT x2
NOT n1 x1
NOT n2 x2
NOT p n1
NOT q n2
NAND r p q
NOT out r
OUTPUT out
)";

// constant 1 with both inputs in the cone; 4 satisfying assignments.
inline const char* kTautology = R"(
INPUT x1
INPUT x2
NOT n1 x1
NOT n3 x2
NOT g2 n1
NAND t1 n1 g2
NAND u n3 t1
NAND out n3 u
OUTPUT out
)";

// constant 0 (negated tautology); 0 satisfying assignments.
inline const char* kUnsat = R"(
INPUT x1
INPUT x2
NOT n1 x1
NOT n3 x2
NOT g2 n1
NAND t1 n1 g2
NAND u n3 t1
NAND t2 n3 u
NOT out t2
OUTPUT out
)";

// x1 AND (NOT x1), with x2 consumed elsewhere; 0 satisfying assignments.
inline const char* kContradiction = R"(
INPUT x1
INPUT x2
NOT n1 x1
NOT n2 x2
NOT p n1
NAND a n1 p
NOT c a
NOT q n2
NAND o2 n2 q
NAND f c o2
NOT out f
OUTPUT out
)";

// 3-input constant 0; 0 satisfying assignments.
inline const char* kUnsat3 = R"(
INPUT x1
INPUT x2
INPUT x3
NOT n1 x1
NOT n2 x2
NOT n3 x3
NOT g2 n1
NAND t1 n1 g2
NAND u2 n2 t1
NAND v2 n2 u2
NAND u3 n3 v2
NAND v3 n3 u3
NOT out v3
OUTPUT out
)";

struct SuiteEntry {
  const char* name;
  const char* netlist;
  std::uint64_t sat_count;  // of the valid-form circuit itself
};

// three satisfiable, three unsatisfiable, at most 3 inputs
inline std::vector<SuiteEntry> circuit_suite() {
  return {{"or", kOr, 3},          {"and", kAnd, 1},
          {"tautology", kTautology, 4}, {"unsat", kUnsat, 0},
          {"contradiction", kContradiction, 0}, {"unsat3", kUnsat3, 0}};
}

// Random small games with step costs; deterministic for a fixed seed.
inline Game random_step_game(std::mt19937_64& rng) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  static const std::vector<Rational> kThresholds = {
      Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1),
      Rational(3, 2), Rational(2),    Rational(3)};
  static const std::vector<Rational> kValues = {Rational(0),    Rational(1, 3), Rational(1, 2),
                                                Rational(1),    Rational(3, 2), Rational(2),
                                                Rational(3)};
  static const std::vector<Rational> kWeights = {Rational(1, 4), Rational(1, 2), Rational(1),
                                                 Rational(3, 2), Rational(2)};

  Game game;
  int resources = 1 + pick(4);
  for (int e = 0; e < resources; ++e) {
    int breakpoints = 1 + pick(3);
    std::vector<std::pair<Rational, Rational>> points;
    int t = pick(3), v = pick(3);
    for (int b = 0; b < breakpoints && t < static_cast<int>(kThresholds.size()); ++b) {
      points.emplace_back(kThresholds[t], kValues[std::min<size_t>(v, kValues.size() - 1)]);
      t += 1 + pick(2);
      v += pick(3);
    }
    game.add_resource("e" + std::to_string(e), CostFunction::step(std::move(points)));
  }
  int players = 2 + pick(3);
  for (int i = 0; i < players; ++i) {
    int p = game.add_player("p" + std::to_string(i), kWeights[pick(kWeights.size())]);
    int strategies = 1 + pick(3);
    for (int s = 0; s < strategies; ++s) {
      Strategy strat;
      for (int e = 0; e < resources; ++e)
        if (pick(2)) strat.push_back(e);
      if (strat.empty()) strat.push_back(pick(resources));
      std::sort(strat.begin(), strat.end());
      strat.erase(std::unique(strat.begin(), strat.end()), strat.end());
      game.add_strategy(p, strat);
    }
  }
  game.validate();
  return game;
}

// Random small polynomial games (nonnegative coefficients, degree <= d).
inline Game random_poly_game(std::mt19937_64& rng, int d) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  static const std::vector<Rational> kCoeffs = {Rational(0), Rational(1, 2), Rational(1),
                                                Rational(2), Rational(3)};
  static const std::vector<Rational> kWeights = {Rational(1, 2), Rational(1), Rational(3, 2)};

  Game game;
  game.degree_bound = d;
  int resources = 1 + pick(3);
  for (int e = 0; e < resources; ++e) {
    std::vector<Rational> coeffs(d + 1, Rational(0));
    bool nonzero = false;
    for (int j = 0; j <= d; ++j) {
      coeffs[j] = kCoeffs[pick(kCoeffs.size())];
      nonzero = nonzero || coeffs[j] != 0;
    }
    if (!nonzero) coeffs[1 + pick(d)] = 1;
    game.add_resource("e" + std::to_string(e), CostFunction::polynomial(std::move(coeffs)));
  }
  int players = 2 + pick(2);
  for (int i = 0; i < players; ++i) {
    int p = game.add_player("p" + std::to_string(i), kWeights[pick(kWeights.size())]);
    int strategies = 2 + pick(2);
    for (int s = 0; s < strategies; ++s) {
      Strategy strat;
      for (int e = 0; e < resources; ++e)
        if (pick(2)) strat.push_back(e);
      if (strat.empty()) strat.push_back(pick(resources));
      game.add_strategy(p, strat);
    }
  }
  game.validate();
  return game;
}

inline std::vector<StrategyProfile> all_profiles(const Game& game) {
  std::vector<StrategyProfile> out;
  StrategyProfile profile(game.num_players(), 0);
  while (true) {
    out.push_back(profile);
    int i = game.num_players() - 1;
    while (i >= 0) {
      if (++profile[i] < static_cast<int>(game.player(i).strategies.size())) break;
      profile[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace cgames::fixtures
