#include "cgames/gadget_merge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgames {

namespace {

// Mutable working form for the structural transformations.
struct WorkGame {
  struct Res {
    std::string name;
    std::vector<Rational> coeffs;  // polynomial only
  };
  std::vector<Res> resources;
  std::vector<Player> players;  // strategies index into resources
};

WorkGame to_work(const Game& game) {
  WorkGame wg;
  for (int e = 0; e < game.num_resources(); ++e) {
    if (!game.cost(e).is_polynomial())
      throw std::invalid_argument("normalize expects a polynomial game");
    wg.resources.push_back({game.resource_name(e), game.cost(e).poly().coeffs});
  }
  for (const auto& p : game.players()) wg.players.push_back(p);
  return wg;
}

int monomial_exponent(const std::vector<Rational>& coeffs) {
  int exponent = -1;
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
    if (coeffs[j] == 0) continue;
    if (exponent >= 0) return -2;  // more than one term
    exponent = j;
  }
  return exponent;  // -1 for the zero polynomial
}

// Applies one round of the four structural transformations; returns whether
// anything changed.
bool normalize_pass(WorkGame& wg, std::vector<std::string>& removed) {
  // players with an empty strategy or zero weight leave the game
  auto drops_out = [](const Player& p) {
    return p.weight == 0 || std::any_of(p.strategies.begin(), p.strategies.end(),
                                        [](const Strategy& s) { return s.empty(); });
  };
  size_t before = wg.players.size();
  for (const auto& p : wg.players)
    if (drops_out(p)) removed.push_back(p.id);
  std::erase_if(wg.players, drops_out);
  bool changed = wg.players.size() != before;

  // zero-cost resources disappear from every strategy
  std::vector<bool> zero(wg.resources.size(), false);
  bool any_zero = false;
  for (size_t e = 0; e < wg.resources.size(); ++e) {
    int exp = monomial_exponent(wg.resources[e].coeffs);
    if (exp == -1) zero[e] = any_zero = true;
  }
  if (any_zero) {
    changed = true;
    for (auto& p : wg.players)
      for (auto& s : p.strategies) std::erase_if(s, [&](int e) { return zero[e]; });
  }

  // split general polynomials into monomials; expand constants per player
  for (size_t e = 0; e < wg.resources.size(); ++e) {
    int exp = monomial_exponent(wg.resources[e].coeffs);
    if (exp == -1) continue;  // handled above

    if (exp == -2) {
      // one fresh resource per nonzero term, appearing wherever e appeared
      changed = true;
      std::vector<int> replacement;
      auto coeffs = wg.resources[e].coeffs;
      const std::string base = wg.resources[e].name;
      for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
        if (coeffs[j] == 0) continue;
        std::vector<Rational> mono(j + 1, Rational(0));
        mono[j] = coeffs[j];
        replacement.push_back(static_cast<int>(wg.resources.size()));
        wg.resources.push_back({base + "#" + std::to_string(j), std::move(mono)});
      }
      wg.resources[e].coeffs = {Rational(0)};  // retire the original
      for (auto& p : wg.players)
        for (auto& s : p.strategies) {
          auto it = std::find(s.begin(), s.end(), static_cast<int>(e));
          if (it == s.end()) continue;
          s.erase(it);
          s.insert(s.end(), replacement.begin(), replacement.end());
        }
      return true;  // resource list shifted; restart the pass
    }

    if (exp == 0) {
      // constant cost a: per player i a private resource with cost (a/w_i) x
      changed = true;
      const Rational a = wg.resources[e].coeffs[0];
      const std::string base = wg.resources[e].name;
      wg.resources[e].coeffs = {Rational(0)};
      for (auto& p : wg.players) {
        bool uses = false;
        for (auto& s : p.strategies)
          if (std::find(s.begin(), s.end(), static_cast<int>(e)) != s.end()) uses = true;
        if (!uses) continue;
        int fresh = static_cast<int>(wg.resources.size());
        wg.resources.push_back({base + "#c_" + p.id, {Rational(0), a / p.weight}});
        for (auto& s : p.strategies) {
          auto it = std::find(s.begin(), s.end(), static_cast<int>(e));
          if (it == s.end()) continue;
          *it = fresh;
        }
      }
      return true;
    }
  }
  return changed;
}

}  // namespace

NormalizedGame normalize(const Game& game, int d) {
  if (d < 1) throw std::invalid_argument("normalize needs d >= 1");
  for (int e = 0; e < game.num_resources(); ++e)
    if (game.cost(e).is_polynomial() && game.cost(e).degree() > d)
      throw std::invalid_argument("game degree exceeds d");

  WorkGame wg = to_work(game);
  NormalizedGame ng;
  while (normalize_pass(wg, ng.removed_players)) {
  }

  ng.game.degree_bound = d;
  std::vector<int> remap(wg.resources.size(), -1);
  std::set<int> used;
  for (const auto& p : wg.players)
    for (const auto& s : p.strategies) used.insert(s.begin(), s.end());

  for (int e : used) {
    const auto& res = wg.resources[e];
    int exp = monomial_exponent(res.coeffs);
    if (exp < 1) throw std::logic_error("normalization left a non-monomial resource");
    remap[e] = ng.game.add_resource(res.name, CostFunction::monomial(res.coeffs[exp], exp));
    ng.coefficient.push_back(res.coeffs[exp]);
    ng.exponent.push_back(exp);
  }
  for (const auto& p : wg.players) {
    int id = ng.game.add_player(p.id, p.weight);
    for (const auto& s : p.strategies) {
      Strategy strat;
      for (int e : s) strat.push_back(remap[e]);
      ng.game.add_strategy(id, strat);
    }
  }
  if (ng.game.num_players() == 0 || ng.game.num_resources() == 0)
    throw std::invalid_argument("normalization left an empty game");
  ng.game.validate();

  ng.stats.a_min = ng.coefficient[0];
  for (const auto& a : ng.coefficient) ng.stats.a_min = std::min(ng.stats.a_min, a);
  ng.stats.W = 0;
  for (const auto& p : ng.game.players()) ng.stats.W += p.weight;
  ng.stats.c_max = 0;
  for (size_t e = 0; e < ng.coefficient.size(); ++e)
    ng.stats.c_max += ng.coefficient[e] * pow_rational(ng.stats.W, ng.exponent[e]);
  return ng;
}

NormalizedGame rescale(const NormalizedGame& ng, const Rational& gamma) {
  if (gamma <= 0 || gamma > 1) throw std::invalid_argument("gamma must lie in (0, 1]");
  const int d = ng.game.degree_bound.value();

  NormalizedGame out;
  out.game.degree_bound = d;
  for (int e = 0; e < ng.game.num_resources(); ++e) {
    Rational a = pow_rational(gamma, d + 1 - ng.exponent[e]) * ng.coefficient[e];
    out.game.add_resource(ng.game.resource_name(e), CostFunction::monomial(a, ng.exponent[e]));
    out.coefficient.push_back(a);
    out.exponent.push_back(ng.exponent[e]);
  }
  for (int p = 0; p < ng.game.num_players(); ++p) {
    const auto& player = ng.game.player(p);
    out.game.add_player(player.id, gamma * player.weight);
    for (const auto& s : player.strategies) out.game.add_strategy(p, s);
  }
  out.game.validate();

  out.stats.a_min = out.coefficient[0];
  for (const auto& a : out.coefficient) out.stats.a_min = std::min(out.stats.a_min, a);
  out.stats.W = gamma * ng.stats.W;
  out.stats.c_max = 0;
  for (size_t e = 0; e < out.coefficient.size(); ++e)
    out.stats.c_max += out.coefficient[e] * pow_rational(out.stats.W, out.exponent[e]);
  return out;
}

Rational choose_gamma(const NormStats& stats, const Rational& coeff_sum,
                      const Rational& alpha_bar, const Rational& mu, int d) {
  if (stats.W <= 0 || stats.a_min <= 0 || stats.c_max <= 0 || coeff_sum <= 0)
    throw std::invalid_argument("choose_gamma needs positive stats");
  const Rational three_halves_d = pow_rational(Rational(3, 2), d);
  Rational b1 = 1 / stats.W;
  Rational b2 = mu / (mu - 1) * three_halves_d / coeff_sum;
  Rational b3 = stats.a_min / (stats.c_max * alpha_bar * alpha_bar);
  Rational gamma = std::min(std::min(b1, b2), b3) / 2;
  if (gamma > 1) gamma = 1;

  if (!(gamma * stats.W < 1) || !(gamma * coeff_sum < mu / (mu - 1) * three_halves_d) ||
      !(gamma * alpha_bar * alpha_bar < stats.a_min / stats.c_max))
    throw std::logic_error("gamma constraints not satisfied");
  return gamma;
}

MergedGame merge_games(const Circuit& circuit, int d, const Rational& alpha, const Game& core,
                       const OracleConfig& oracle) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  if (!(alpha < d)) throw std::invalid_argument("merge requires alpha < d");

  NormalizedGame ng = normalize(core, d);
  ThresholdReport threshold = nonexistence_threshold(ng.game, oracle);
  if (!(alpha < threshold.threshold))
    throw std::invalid_argument("core game admits an alpha-PNE; nothing to merge");
  Rational alpha_bar = threshold.threshold.is_infinite()
                           ? alpha + 1
                           : alpha + (threshold.threshold.value() - alpha) / 2;

  CircuitGameParams params = select_params(d, alpha_bar);
  Rational coeff_sum = 0;
  for (const auto& a : ng.coefficient) coeff_sum += a;
  Rational gamma = choose_gamma(ng.stats, coeff_sum, alpha_bar, params.mu, d);
  NormalizedGame scaled = rescale(ng, gamma);

  Circuit valid = is_valid_form(circuit) ? circuit : make_valid(circuit);
  CircuitGame circuit_part = compile_circuit_game(canonicalize(valid), params);

  MergedGame merged;
  merged.circuit_part = circuit_part;
  merged.gamma = gamma;
  merged.alpha = alpha;
  merged.alpha_bar = alpha_bar;
  merged.output_player = circuit_part.output_player();
  merged.num_circuit_players = circuit_part.game.num_players();

  Game& game = merged.game;
  std::vector<int> circ_resource(circuit_part.game.num_resources());
  for (int e = 0; e < circuit_part.game.num_resources(); ++e)
    circ_resource[e] =
        game.add_resource("circ/" + circuit_part.game.resource_name(e), circuit_part.game.cost(e));
  std::vector<int> core_resource(scaled.game.num_resources());
  for (int e = 0; e < scaled.game.num_resources(); ++e)
    core_resource[e] =
        game.add_resource("core/" + scaled.game.resource_name(e), scaled.game.cost(e));
  merged.dummy_resource = game.add_resource(
      "dummy", CostFunction::polynomial({scaled.stats.a_min / alpha_bar}));

  for (int p = 0; p < circuit_part.game.num_players(); ++p) {
    const auto& player = circuit_part.game.player(p);
    game.add_player(player.id, player.weight);
    for (size_t s = 0; s < player.strategies.size(); ++s) {
      Strategy strat;
      for (int e : player.strategies[s]) strat.push_back(circ_resource[e]);
      if (p == merged.output_player && static_cast<int>(s) == CircuitGame::kOneStrategy)
        strat.insert(strat.end(), core_resource.begin(), core_resource.end());
      game.add_strategy(p, strat);
    }
  }
  for (int p = 0; p < scaled.game.num_players(); ++p) {
    const auto& player = scaled.game.player(p);
    int id = game.add_player("core/" + player.id, player.weight);
    merged.core_players.push_back(id);
    for (const auto& s : player.strategies) {
      Strategy strat;
      for (int e : s) strat.push_back(core_resource[e]);
      game.add_strategy(id, strat);
    }
    merged.core_dummy_strategy.push_back(game.add_strategy(id, {merged.dummy_resource}));
  }
  game.validate();
  return merged;
}

StrategyProfile merged_profile(const MergedGame& merged, const Assignment& x) {
  StrategyProfile circuit = extend_to_pne(merged.circuit_part, x);
  StrategyProfile profile(merged.game.num_players(), 0);
  std::copy(circuit.begin(), circuit.end(), profile.begin());
  for (size_t i = 0; i < merged.core_players.size(); ++i)
    profile[merged.core_players[i]] = merged.core_dummy_strategy[i];
  return profile;
}

ParsimonyReport verify_parsimony(const MergedGame& merged, const Rational& alpha,
                                 const OracleConfig& oracle) {
  const CanonicalCircuit& circuit = merged.circuit_part.circuit;
  if (circuit.num_inputs > 12) throw std::invalid_argument("too many inputs for parsimony check");

  std::vector<StrategyProfile> expected;
  const std::uint64_t total = std::uint64_t(1) << circuit.num_inputs;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment x(circuit.num_inputs);
    for (int i = 0; i < circuit.num_inputs; ++i) x[i] = (bits >> i) & 1;
    if (evaluate(circuit, x)) expected.push_back(merged_profile(merged, x));
  }
  std::sort(expected.begin(), expected.end());

  OracleReport report = enumerate_pne(merged.game, alpha, oracle);
  std::vector<StrategyProfile> found = report.pne;
  std::sort(found.begin(), found.end());

  ParsimonyReport out;
  out.sat_count = expected.size();
  out.pne_count = found.size();
  out.bijection = expected == found;
  return out;
}

}  // namespace cgames
