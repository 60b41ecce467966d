#include "cgames/gadget_circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgames/enclosure.hpp"

namespace cgames {

std::pair<Rational, Rational> lambda_window(int d, const Rational& alpha, const Rational& mu) {
  const Rational p3d(pow(Int(3), static_cast<unsigned>(d)));
  Rational lower = alpha * (1 + p3d / (mu - 1));
  Rational upper = p3d / lower;
  return {lower, upper};
}

CircuitGameParams select_params(int d, const Rational& alpha) {
  if (d < 1) throw std::invalid_argument("select_params needs d >= 1");
  if (alpha < 1) throw std::invalid_argument("select_params needs alpha >= 1");

  const Enclosure p3h = pow3_half(d);        // 3^(d/2)
  const Enclosure p3dh = pow3_half(3 * d);   // 3^(d + d/2)
  if (!(alpha < p3h.lo))
    throw AlphaTooLargeError("alpha must be below the certified lower bound of 3^(d/2)");

  Rational eps = (p3h.lo - alpha) / 2;
  Rational eps_min = std::min(eps, Rational(1));
  Rational bound = std::max(1 + 2 * p3dh.hi, 1 + p3dh.hi / eps_min);
  Rational mu = Rational(num(dyadic_floor(bound, 0)) + 1);  // smallest integer > bound

  auto [lower, upper] = lambda_window(d, alpha, mu);
  if (!(lower < upper)) throw std::logic_error("empty lambda window");
  Rational lambda = (lower + upper) / 2;

  CircuitGameParams params{d, alpha, mu, lambda, p3dh.hi / (mu - 1)};
  if (!(params.mu > 1 + 2 * p3dh.hi)) throw std::logic_error("mu below model bound");
  return params;
}

CircuitGame compile_circuit_game(const CanonicalCircuit& circuit,
                                 const CircuitGameParams& params) {
  CircuitGame cg{Game{}, circuit, params, {}, -1, {}, {}, {}};
  Game& game = cg.game;
  game.degree_bound = params.d;

  const int K = circuit.num_gates();
  cg.zero_resource.resize(K);
  cg.one_resource.resize(K);
  Rational mu_pow = 1;
  for (int k = 0; k < K; ++k) {
    mu_pow *= params.mu;  // mu^(k+1) for gate g_(k+1)
    std::string suffix = std::to_string(k + 1);
    cg.zero_resource[k] =
        game.add_resource("0_" + suffix, CostFunction::monomial(params.lambda * mu_pow, params.d));
    cg.one_resource[k] =
        game.add_resource("1_" + suffix, CostFunction::monomial(mu_pow, params.d));
  }

  // input players: the zero/one strategy is the corresponding resource of the
  // single gate fed by the input
  for (int i = 0; i < circuit.num_inputs; ++i) {
    int p = game.add_player("X" + std::to_string(i + 1), 1);
    int gate = circuit.input_gate[i];
    game.add_strategy(p, {cg.zero_resource[gate]});
    game.add_strategy(p, {cg.one_resource[gate]});
    cg.input_players.push_back(p);
  }

  // static player: all one-resources of gates with a fixed-one input
  cg.static_player = game.add_player("P", 1);
  Strategy static_strategy;
  for (int k : circuit.successors_of_one()) static_strategy.push_back(cg.one_resource[k]);
  game.add_strategy(cg.static_player, static_strategy);

  // gate players: own resource plus the resources of direct successors
  for (int k = 0; k < K; ++k) {
    int p = game.add_player("G" + std::to_string(k + 1), 1);
    Strategy zero{cg.zero_resource[k]}, one{cg.one_resource[k]};
    for (int succ : circuit.successors_of_gate(k)) {
      zero.push_back(cg.zero_resource[succ]);
      one.push_back(cg.one_resource[succ]);
    }
    game.add_strategy(p, zero);
    game.add_strategy(p, one);
    cg.gate_players.push_back(p);
  }
  game.validate();
  return cg;
}

namespace {

// bit played by the player behind a gate-input reference
bool ref_bit(const CircuitGame& cg, const StrategyProfile& profile,
             const CanonicalCircuit::Ref& ref) {
  using Kind = CanonicalCircuit::Ref::Kind;
  switch (ref.kind) {
    case Kind::One:
      return true;
    case Kind::Input:
      return profile[cg.input_players[ref.index]] == CircuitGame::kOneStrategy;
    default:
      return profile[cg.gate_players[ref.index]] == CircuitGame::kOneStrategy;
  }
}

}  // namespace

bool follows_nand(const CircuitGame& cg, const StrategyProfile& profile) {
  for (int k = 0; k < cg.circuit.num_gates(); ++k) {
    bool a = ref_bit(cg, profile, cg.circuit.gates[k].a);
    bool b = ref_bit(cg, profile, cg.circuit.gates[k].b);
    bool gate_bit = profile[cg.gate_players[k]] == CircuitGame::kOneStrategy;
    if (gate_bit != !(a && b)) return false;
  }
  return true;
}

StrategyProfile extend_to_pne(const CircuitGame& cg, const Assignment& x) {
  if (static_cast<int>(x.size()) != cg.circuit.num_inputs)
    throw std::invalid_argument("assignment length mismatch");
  StrategyProfile profile(cg.game.num_players(), 0);
  for (int i = 0; i < cg.circuit.num_inputs; ++i)
    profile[cg.input_players[i]] = x[i] ? CircuitGame::kOneStrategy : CircuitGame::kZeroStrategy;
  // gate inputs always have larger indices, so fill from the back
  for (int k = cg.circuit.num_gates() - 1; k >= 0; --k) {
    bool a = ref_bit(cg, profile, cg.circuit.gates[k].a);
    bool b = ref_bit(cg, profile, cg.circuit.gates[k].b);
    profile[cg.gate_players[k]] =
        !(a && b) ? CircuitGame::kOneStrategy : CircuitGame::kZeroStrategy;
  }
  return profile;
}

Assignment input_assignment(const CircuitGame& cg, const StrategyProfile& profile) {
  Assignment x(cg.circuit.num_inputs);
  for (int i = 0; i < cg.circuit.num_inputs; ++i)
    x[i] = profile[cg.input_players[i]] == CircuitGame::kOneStrategy;
  return x;
}

Thm2Instance thm2_instance(Thm2Kind kind, const Circuit& raw, int d, const Rational& alpha,
                           const Rational* z) {
  Thm2Instance instance;
  instance.kind = kind;

  CircuitGameParams params = select_params(d, alpha);

  if (kind == Thm2Kind::CostAtMost) {
    // negate first, then buffer inputs; the new output gate keeps a fixed-one
    // input after canonicalization
    Circuit valid = make_valid(negate_output(raw));
    CanonicalCircuit canon = canonicalize(valid);
    instance.cgame = compile_circuit_game(canon, params);

    const Rational mu = params.mu, lambda = params.lambda;
    const Rational two_d(pow(Int(2), static_cast<unsigned>(d)));
    Rational scale = 1;
    Rational yes = lambda * mu, no = mu * two_d;  // c0_1(1) vs c1_1(2)
    if (z) {
      if (*z <= 0) throw std::invalid_argument("cost bound z must be positive");
      // rational c with c*lambda*mu < z < c*2^d*mu
      scale = (*z / (two_d * mu) + *z / (lambda * mu)) / 2;
      instance.z = *z;
    } else {
      instance.z = (yes + no) / 2;
    }
    if (scale != 1) {
      Game rescaled;
      rescaled.degree_bound = instance.cgame.game.degree_bound;
      for (int e = 0; e < instance.cgame.game.num_resources(); ++e) {
        const auto& coeffs = instance.cgame.game.cost(e).poly().coeffs;
        std::vector<Rational> scaled;
        for (const auto& c : coeffs) scaled.push_back(c * scale);
        rescaled.add_resource(instance.cgame.game.resource_name(e),
                              CostFunction::polynomial(std::move(scaled)));
      }
      for (int p = 0; p < instance.cgame.game.num_players(); ++p) {
        const auto& player = instance.cgame.game.player(p);
        rescaled.add_player(player.id, player.weight);
        for (const auto& s : player.strategies) rescaled.add_strategy(p, s);
      }
      instance.cgame.game = std::move(rescaled);
      yes *= scale;
      no *= scale;
      if (!(yes < instance.z && instance.z < no))
        throw std::logic_error("cost rescaling failed to bracket z");
    }
    instance.yes_cost = yes;
    instance.no_cost = no;
    instance.query_player = instance.cgame.output_player();
    // negated output: satisfiable raw circuit <=> some PNE reaches the low cost
    instance.expected = count_satisfying(canonicalize(make_valid(raw))) > 0;
    return instance;
  }

  Circuit valid = make_valid(raw);
  CanonicalCircuit canon = canonicalize(valid);
  instance.cgame = compile_circuit_game(canon, params);
  instance.expected = count_satisfying(canon) > 0;
  instance.query_player = instance.cgame.output_player();
  instance.query_strategy = CircuitGame::kOneStrategy;

  if (kind == Thm2Kind::ResourceUsed) {
    // zero-cost resource appended to the target strategy; using it is
    // equivalent to the output player picking her one strategy
    Game& game = instance.cgame.game;
    int r = game.add_resource("r", CostFunction::polynomial({Rational(0)}));
    Game patched;
    patched.degree_bound = game.degree_bound;
    for (int e = 0; e < game.num_resources(); ++e)
      patched.add_resource(game.resource_name(e), game.cost(e));
    for (int p = 0; p < game.num_players(); ++p) {
      const auto& player = game.player(p);
      patched.add_player(player.id, player.weight);
      for (size_t s = 0; s < player.strategies.size(); ++s) {
        Strategy strat = player.strategies[s];
        if (p == instance.query_player && static_cast<int>(s) == CircuitGame::kOneStrategy)
          strat.push_back(r);
        patched.add_strategy(p, strat);
      }
    }
    instance.cgame.game = std::move(patched);
    instance.query_resource = r;
    instance.query_strategy = -1;
  }
  return instance;
}

bool thm2_answer(const Thm2Instance& instance, const std::vector<StrategyProfile>& pne) {
  const Game& game = instance.cgame.game;
  for (const auto& profile : pne) {
    switch (instance.kind) {
      case Thm2Kind::SubsetProfile:
        if (profile[instance.query_player] == instance.query_strategy) return true;
        break;
      case Thm2Kind::ResourceUsed: {
        for (int p = 0; p < game.num_players(); ++p) {
          const auto& s = game.player(p).strategies[profile[p]];
          if (std::binary_search(s.begin(), s.end(), instance.query_resource)) return true;
        }
        break;
      }
      case Thm2Kind::CostAtMost:
        if (player_cost(game, profile, instance.query_player) <= instance.z) return true;
        break;
    }
  }
  return false;
}

}  // namespace cgames
