#include "cgames/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgames {

int Game::add_resource(const std::string& name, CostFunction cost) {
  if (resource_index_.count(name)) throw std::invalid_argument("duplicate resource id: " + name);
  int idx = num_resources();
  resource_names_.push_back(name);
  costs_.push_back(std::move(cost));
  resource_index_.emplace(name, idx);
  return idx;
}

int Game::add_player(const std::string& id, Rational weight) {
  if (weight < 0) throw std::invalid_argument("negative weight for player " + id);
  players_.push_back(Player{id, std::move(weight), {}});
  return num_players() - 1;
}

int Game::add_strategy(int player, Strategy resources) {
  std::sort(resources.begin(), resources.end());
  for (size_t i = 0; i < resources.size(); ++i) {
    if (resources[i] < 0 || resources[i] >= num_resources())
      throw std::out_of_range("strategy references unknown resource");
    if (i > 0 && resources[i] == resources[i - 1])
      throw std::invalid_argument("strategy contains duplicate resource");
  }
  auto& strategies = players_[player].strategies;
  strategies.push_back(std::move(resources));
  return static_cast<int>(strategies.size()) - 1;
}

int Game::resource_index(const std::string& name) const {
  auto it = resource_index_.find(name);
  return it == resource_index_.end() ? -1 : it->second;
}

int Game::player_index(const std::string& id) const {
  for (int i = 0; i < num_players(); ++i)
    if (players_[i].id == id) return i;
  return -1;
}

void Game::validate() const {
  for (const auto& p : players_) {
    if (p.strategies.empty()) throw std::invalid_argument("player " + p.id + " has no strategy");
    if (p.weight < 0) throw std::invalid_argument("player " + p.id + " has negative weight");
  }
  if (degree_bound) {
    for (const auto& c : costs_)
      if (c.is_polynomial() && static_cast<int>(c.poly().coeffs.size()) > *degree_bound + 1)
        throw std::invalid_argument("polynomial exceeds degree bound");
  }
}

bool operator==(const Game& a, const Game& b) {
  if (a.resource_names_ != b.resource_names_) return false;
  if (!(a.costs_ == b.costs_)) return false;
  if (a.players_.size() != b.players_.size()) return false;
  for (size_t i = 0; i < a.players_.size(); ++i) {
    const auto &pa = a.players_[i], &pb = b.players_[i];
    if (pa.id != pb.id || pa.weight != pb.weight || pa.strategies != pb.strategies) return false;
  }
  return a.degree_bound == b.degree_bound;
}

Int profile_count(const Game& game) {
  Int total = 1;
  for (const auto& p : game.players()) total *= static_cast<int>(p.strategies.size());
  return total;
}

Rational load(const Game& game, const StrategyProfile& profile, int resource) {
  if (resource < 0 || resource >= game.num_resources())
    throw std::out_of_range("unknown resource id");
  Rational total = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& s = game.player(i).strategies[profile[i]];
    if (std::binary_search(s.begin(), s.end(), resource)) total += game.player(i).weight;
  }
  return total;
}

Rational player_cost(const Game& game, const StrategyProfile& profile, int player) {
  Rational total = 0;
  for (int e : game.player(player).strategies[profile[player]])
    total += game.cost(e)(load(game, profile, e));
  return total;
}

Rational deviation_cost(const Game& game, const StrategyProfile& profile, int player, int alt) {
  StrategyProfile deviated = profile;
  deviated[player] = alt;
  return player_cost(game, deviated, player);
}

Rational social_cost(const Game& game, const StrategyProfile& profile) {
  Rational total = 0;
  for (int i = 0; i < game.num_players(); ++i) total += player_cost(game, profile, i);
  return total;
}

std::optional<DeviationWitness> find_alpha_violation(const Game& game,
                                                     const StrategyProfile& profile,
                                                     const Rational& alpha) {
  ProfileEvaluator eval(game);
  eval.set_profile(profile);
  for (int i = 0; i < game.num_players(); ++i) {
    const Rational current = eval.player_cost(i);
    if (current == 0) continue;  // cannot improve below zero
    int alternatives = static_cast<int>(game.player(i).strategies.size());
    for (int alt = 0; alt < alternatives; ++alt) {
      if (alt == profile[i]) continue;
      Rational dev = eval.deviation_cost(i, alt);
      if (current > alpha * dev) {
        Factor ratio = dev == 0 ? Factor::infinity() : Factor(current / dev);
        return DeviationWitness{i, alt, ratio};
      }
    }
  }
  return std::nullopt;
}

bool is_alpha_pne(const Game& game, const StrategyProfile& profile, const Rational& alpha) {
  return !find_alpha_violation(game, profile, alpha).has_value();
}

bool is_alpha_dominating(const Game& game, const StrategyProfile& profile, int player,
                         const Rational& alpha) {
  ProfileEvaluator eval(game);
  eval.set_profile(profile);
  const Rational current = eval.player_cost(player);
  int alternatives = static_cast<int>(game.player(player).strategies.size());
  for (int alt = 0; alt < alternatives; ++alt) {
    if (alt == profile[player]) continue;
    if (!(eval.deviation_cost(player, alt) > alpha * current)) return false;
  }
  return true;
}

ProfileEvaluator::ProfileEvaluator(const Game& game)
    : game_(game), loads_(game.num_resources(), Rational(0)) {}

void ProfileEvaluator::set_profile(const StrategyProfile& profile) {
  profile_ = profile;
  std::fill(loads_.begin(), loads_.end(), Rational(0));
  for (int i = 0; i < game_.num_players(); ++i)
    for (int e : game_.player(i).strategies[profile[i]]) loads_[e] += game_.player(i).weight;
}

Rational ProfileEvaluator::player_cost(int player) const {
  Rational total = 0;
  for (int e : game_.player(player).strategies[profile_[player]])
    total += game_.cost(e)(loads_[e]);
  return total;
}

Rational ProfileEvaluator::deviation_cost(int player, int alt) const {
  const auto& current = game_.player(player).strategies[profile_[player]];
  const Rational& w = game_.player(player).weight;
  Rational total = 0;
  for (int e : game_.player(player).strategies[alt]) {
    bool already_on = std::binary_search(current.begin(), current.end(), e);
    total += game_.cost(e)(already_on ? loads_[e] : loads_[e] + w);
  }
  return total;
}

std::pair<Factor, DeviationWitness> ProfileEvaluator::best_improvement() const {
  Factor best(Rational(1));  // a profile where nobody can move still has factor 1
  DeviationWitness witness;
  for (int i = 0; i < game_.num_players(); ++i) {
    const Rational current = player_cost(i);
    if (current == 0) continue;
    int alternatives = static_cast<int>(game_.player(i).strategies.size());
    for (int alt = 0; alt < alternatives; ++alt) {
      if (alt == profile_[i]) continue;
      Rational dev = deviation_cost(i, alt);
      Factor ratio = dev == 0 ? Factor::infinity() : Factor(current / dev);
      if (ratio > best) {
        best = ratio;
        witness = DeviationWitness{i, alt, ratio};
        if (best.is_infinite()) return {best, witness};
      }
    }
  }
  return {best, witness};
}

}  // namespace cgames
