#include "cgames/gadget_general.hpp"

#include <stdexcept>

#include "cgames/enclosure.hpp"

namespace cgames {

namespace {

// sign of (x+1)^m - x^(m+1); positive below the root, negative above
int phi_poly_sign(const Rational& x, int m) {
  Rational value = pow_rational(x + 1, m) - pow_rational(x, m + 1);
  return value > 0 ? 1 : (value == 0 ? 0 : -1);
}

}  // namespace

PhiApprox phi(int m, const Rational& tolerance) {
  if (m < 1) throw std::invalid_argument("phi needs m >= 1");
  if (tolerance <= 0) throw std::invalid_argument("phi needs a positive tolerance");
  Rational lo = 1, hi = m + 2;
  if (phi_poly_sign(lo, m) <= 0 || phi_poly_sign(hi, m) >= 0)
    throw std::logic_error("phi: bracket does not straddle the root");
  while (hi - lo > tolerance) {
    Rational mid = (lo + hi) / 2;
    int s = phi_poly_sign(mid, m);
    if (s == 0) throw std::logic_error("phi: rational root is impossible");
    (s > 0 ? lo : hi) = mid;
  }
  return PhiApprox{m, lo, hi};
}

PotentialReport potential_certificate(const Game& game, const StrategyProfile& profile, int i,
                                      int alt) {
  StrategyProfile deviated = profile;
  deviated[i] = alt;

  PotentialReport report;
  const int n = game.num_players();
  const Rational cost_i_before = player_cost(game, profile, i);
  const Rational cost_i_after = player_cost(game, deviated, i);
  report.social_delta = social_cost(game, deviated) - social_cost(game, profile);
  report.potential_bound = Rational(n) * cost_i_after - cost_i_before;
  report.holds = report.social_delta <= report.potential_bound;

  report.all_per_player_ok = true;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    Rational delta = player_cost(game, deviated, j) - player_cost(game, profile, j);
    bool ok = delta <= cost_i_after;
    report.others.push_back({j, delta, cost_i_after, ok});
    report.all_per_player_ok = report.all_per_player_ok && ok;
  }
  return report;
}

namespace {

// step cost values of the gadget: v_i = (1/xi) (1 + 1/xi)^(i-1)
std::vector<Rational> gadget_values(int m, const Rational& xi) {
  std::vector<Rational> values(m + 1);
  const Rational growth = 1 + 1 / xi;
  Rational acc = 1 / xi;
  for (int i = 1; i <= m; ++i) {
    values[i] = acc;
    acc *= growth;
  }
  return values;
}

Game build_gadget_scaled(int n, const Rational& xi, const Rational& weight_scale,
                         std::vector<int>* a_out, std::vector<int>* b_out) {
  const int m = n - 1;
  Game game;
  std::vector<int> a(m + 1), b(m + 1);
  const auto values = gadget_values(m, xi);
  for (int i = 0; i <= m; ++i) {
    Rational threshold = i == 0 ? Rational(1) : 1 + Rational(1) / pow_rational(2, i);
    Rational value = i == 0 ? Rational(1) : values[i];
    CostFunction cost = CostFunction::step({{threshold * weight_scale, value}});
    a[i] = game.add_resource("a_" + std::to_string(i), cost);
    b[i] = game.add_resource("b_" + std::to_string(i), cost);
  }
  for (int i = 0; i <= m; ++i) {
    int p = game.add_player("p" + std::to_string(i),
                            weight_scale / pow_rational(2, i));
    if (i == 0) {
      game.add_strategy(p, a);
      game.add_strategy(p, b);
    } else {
      Strategy sa(a.begin(), a.begin() + i), sb(b.begin(), b.begin() + i);
      sa.push_back(b[i]);
      sb.push_back(a[i]);
      game.add_strategy(p, sa);
      game.add_strategy(p, sb);
    }
  }
  game.validate();
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return game;
}

}  // namespace

GeneralGadget build_general_gadget(int n, const Rational& tolerance) {
  if (n < 2) throw std::invalid_argument("build_general_gadget needs n >= 2");
  const int m = n - 1;
  PhiApprox enclosure = phi(m, tolerance);
  Rational xi = enclosure.lower;
  if (!(xi > 1)) throw std::logic_error("xi_bar lower bound did not clear 1");
  // substituted case-1 ratio must still exceed xi_bar
  if (!(pow_rational(1 + 1 / xi, m) > xi))
    throw std::logic_error("case-1 ratio lost under the rational substitution");

  GeneralGadget gadget{build_gadget_scaled(n, xi, 1, nullptr, nullptr), n, xi, enclosure};
  // weight separation: sum_(k=i..m) w_k < w_(i-1)
  for (int i = 1; i <= m; ++i) {
    Rational tail = 0;
    for (int k = i; k <= m; ++k) tail += Rational(1) / pow_rational(2, k);
    if (!(tail < Rational(1) / pow_rational(2, i - 1)))
      throw std::logic_error("weight separation violated");
  }
  return gadget;
}

GeneralMergedGame merge_general(const Circuit& circuit, int n, const Rational& alpha_tilde) {
  if (n < 2) throw std::invalid_argument("merge_general needs n >= 2");
  if (alpha_tilde < 1) throw std::invalid_argument("alpha must be at least 1");
  const int m = n - 1;

  // xi_bar must leave room both above alpha (strictly) and for the
  // dummy-escape ratio xi^2 / (1+1/xi)^m > alpha; tighten until it does
  Rational tolerance(1, 1000000000);
  PhiApprox enclosure = phi(m, tolerance);
  for (int round = 0;; ++round) {
    if (!(alpha_tilde < enclosure.upper))
      throw std::invalid_argument("alpha_tilde is not below Phi_(n-1)");
    const Rational& xi = enclosure.lower;
    if (alpha_tilde < xi && pow_rational(xi, 2) > alpha_tilde * pow_rational(1 + 1 / xi, m))
      break;
    if (round >= 8) throw std::runtime_error("could not certify xi_bar for this alpha");
    tolerance /= 1000000;
    enclosure = phi(m, tolerance);
  }
  const Rational xi = enclosure.lower;

  // smallest degree with 3^d above Phi^2 (upper bound) and a usable window
  int d = 1;
  while (true) {
    bool big_enough = Rational(pow(Int(3), static_cast<unsigned>(d))) >
                      pow_rational(enclosure.upper, 2);
    if (big_enough && alpha_tilde < pow3_half(d).lo) break;
    if (++d > 64) throw std::runtime_error("no suitable degree found");
  }
  CircuitGameParams params = select_params(d, alpha_tilde);

  Circuit valid = is_valid_form(circuit) ? circuit : make_valid(circuit);
  CanonicalCircuit negated = canonicalize(negate_output(valid));
  CircuitGame circuit_part = compile_circuit_game(negated, params);

  std::vector<int> core_a, core_b;
  Game core = build_gadget_scaled(n, xi, Rational(1, 2), &core_a, &core_b);
  Rational total_core_weight = 0;
  for (const auto& p : core.players()) total_core_weight += p.weight;
  if (!(total_core_weight < 1)) throw std::logic_error("halved weights should sum below 1");

  GeneralMergedGame merged;
  merged.circuit_part = circuit_part;
  merged.n = n;
  merged.d = d;
  merged.xi_bar = xi;
  merged.alpha_tilde = alpha_tilde;

  Game& game = merged.game;
  std::vector<int> circ_resource(circuit_part.game.num_resources());
  for (int e = 0; e < circuit_part.game.num_resources(); ++e)
    circ_resource[e] =
        game.add_resource("circ/" + circuit_part.game.resource_name(e), circuit_part.game.cost(e));
  std::vector<int> core_resource(core.num_resources());
  for (int e = 0; e < core.num_resources(); ++e)
    core_resource[e] = game.add_resource("core/" + core.resource_name(e), core.cost(e));
  merged.dummy_resource =
      game.add_resource("dummy", CostFunction::step({{Rational(1), pow_rational(xi, 2)}}));

  merged.num_circuit_players = circuit_part.game.num_players();
  merged.output_player = circuit_part.output_player();
  for (int p = 0; p < circuit_part.game.num_players(); ++p) {
    const auto& player = circuit_part.game.player(p);
    game.add_player(player.id, player.weight);
    for (size_t s = 0; s < player.strategies.size(); ++s) {
      Strategy strat;
      for (int e : player.strategies[s]) strat.push_back(circ_resource[e]);
      if (p == merged.output_player && static_cast<int>(s) == CircuitGame::kOneStrategy)
        strat.push_back(merged.dummy_resource);
      game.add_strategy(p, strat);
    }
  }
  for (int p = 0; p < core.num_players(); ++p) {
    const auto& player = core.player(p);
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

std::vector<std::pair<int, Rational>> frontier_general(int n_max, const Rational& tolerance) {
  if (n_max < 2) throw std::invalid_argument("frontier_general needs n_max >= 2");
  std::vector<std::pair<int, Rational>> rows;
  for (int n = 2; n <= n_max; ++n) rows.emplace_back(n, phi(n - 1, tolerance).lower);
  return rows;
}

}  // namespace cgames
