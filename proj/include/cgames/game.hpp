#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgames/cost_function.hpp"
#include "cgames/rational.hpp"

namespace cgames {

// Strategies are sorted duplicate-free lists of resource indices.
using Strategy = std::vector<int>;

struct Player {
  std::string id;
  Rational weight;
  std::vector<Strategy> strategies;
};

// A weighted atomic congestion game with explicit strategy sets. Immutable
// once built; safe to share across threads.
class Game {
 public:
  int add_resource(const std::string& name, CostFunction cost);
  int add_player(const std::string& id, Rational weight);
  // Resources given by index; sorted and checked for duplicates here.
  int add_strategy(int player, Strategy resources);

  int num_resources() const { return static_cast<int>(costs_.size()); }
  int num_players() const { return static_cast<int>(players_.size()); }
  const CostFunction& cost(int resource) const { return costs_[resource]; }
  const std::string& resource_name(int resource) const { return resource_names_[resource]; }
  const Player& player(int i) const { return players_[i]; }
  const std::vector<Player>& players() const { return players_; }
  int resource_index(const std::string& name) const;          // -1 if unknown
  int player_index(const std::string& id) const;              // -1 if unknown

  std::optional<int> degree_bound;

  // Checks the structural invariants: nonempty strategy sets, weights >= 0,
  // resource indices in range, and the degree bound if one is set.
  void validate() const;

  friend bool operator==(const Game& a, const Game& b);

 private:
  std::vector<std::string> resource_names_;
  std::vector<CostFunction> costs_;
  std::unordered_map<std::string, int> resource_index_;
  std::vector<Player> players_;
};

// One strategy index per player.
using StrategyProfile = std::vector<int>;

// Total number of profiles as an exact integer.
Int profile_count(const Game& game);

Rational load(const Game& game, const StrategyProfile& profile, int resource);
Rational player_cost(const Game& game, const StrategyProfile& profile, int player);
// Cost of `player` if they unilaterally switch to strategy `alt`.
Rational deviation_cost(const Game& game, const StrategyProfile& profile, int player, int alt);
Rational social_cost(const Game& game, const StrategyProfile& profile);

struct DeviationWitness {
  int player = -1;
  int to_strategy = -1;
  Factor ratio;  // C_i(s) / C_i(alt, s_-i), or infinity
};

// First (lowest player id, then lowest strategy index) deviation violating
// C_i(s) <= alpha * C_i(s_i', s_-i); nullopt iff the profile is an alpha-PNE.
std::optional<DeviationWitness> find_alpha_violation(const Game& game,
                                                     const StrategyProfile& profile,
                                                     const Rational& alpha);
bool is_alpha_pne(const Game& game, const StrategyProfile& profile, const Rational& alpha);

// True iff every alternative strategy costs strictly more than alpha * C_i(s).
bool is_alpha_dominating(const Game& game, const StrategyProfile& profile, int player,
                         const Rational& alpha);

// Shared helper for exhaustive scans: loads computed once per profile,
// deviation costs by local adjustment.
class ProfileEvaluator {
 public:
  explicit ProfileEvaluator(const Game& game);
  void set_profile(const StrategyProfile& profile);
  const Rational& resource_load(int resource) const { return loads_[resource]; }
  Rational player_cost(int player) const;
  Rational deviation_cost(int player, int alt) const;
  // Largest improvement factor available to any player (floored at 1), plus
  // the first deviation attaining it.
  std::pair<Factor, DeviationWitness> best_improvement() const;

 private:
  const Game& game_;
  StrategyProfile profile_;
  std::vector<Rational> loads_;
};

}  // namespace cgames
