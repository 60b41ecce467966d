#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cgames/game.hpp"

namespace cgames {

// Exhaustive enumeration is the ground truth for every other module; it never
// samples or truncates. Oversized inputs are refused loudly instead.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleConfig {
  std::uint64_t budget = std::uint64_t(1) << 24;
  int workers = 1;
};

struct OracleReport {
  Rational alpha;
  std::vector<StrategyProfile> pne;  // in lexicographic profile order
  std::uint64_t count() const { return pne.size(); }
};

OracleReport enumerate_pne(const Game& game, const Rational& alpha,
                           const OracleConfig& config = {});

// min over profiles s of max over (i, s_i') of C_i(s)/C_i(s_i', s_-i), each
// profile's maximum floored at 1 and taken as +inf when a zero-cost deviation
// leaves a positive-cost strategy. An alpha-PNE exists iff alpha >= threshold.
struct ThresholdReport {
  Factor threshold;
  StrategyProfile argmin;             // first profile attaining the threshold
  std::optional<DeviationWitness> witness;  // its best improving deviation, if any
};

ThresholdReport nonexistence_threshold(const Game& game, const OracleConfig& config = {});

struct DynamicsStep {
  StrategyProfile from;
  int player;
  int to_strategy;
  Factor factor;  // improvement factor of the applied move; always > alpha
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  StrategyProfile terminal;
  bool reached_pne = false;  // false iff the step limit cut the run short
};

// Repeatedly applies the first (lowest player id, then lowest strategy index)
// alpha-improving move.
DynamicsTrace improving_dynamics(const Game& game, StrategyProfile start, const Rational& alpha,
                                 std::uint64_t max_steps);

}  // namespace cgames
