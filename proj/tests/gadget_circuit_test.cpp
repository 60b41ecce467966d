#include <doctest.h>

#include "cgames/enclosure.hpp"
#include "cgames/gadget_circuit.hpp"
#include "cgames/oracle.hpp"
#include "fixtures.hpp"

using namespace cgames;

namespace {

CircuitGame one_gate_game(const Rational& alpha, int d = 2) {
  Circuit c = parse_circuit("INPUT x1\nNOT g1 x1\nOUTPUT g1\n");
  return compile_circuit_game(canonicalize(c), select_params(d, alpha));
}

std::vector<Assignment> all_assignments(int n) {
  std::vector<Assignment> out;
  for (unsigned long m = 0; m < (1ul << n); ++m) {
    Assignment x(n);
    for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("lambda window endpoints match the hand computation at mu = 55, d = 2") {
  auto [lower, upper] = lambda_window(2, Rational(2), Rational(55));
  CHECK(lower == Rational(7) / 3);    // 2 (1 + 9/54)
  CHECK(upper == Rational(27) / 7);   // 9 / (2 (1 + 9/54))
  CHECK(lower < upper);

  // d = 1, alpha = 1: window is (1 + 3/(mu-1), 3/(1 + 3/(mu-1)))
  Rational mu(100);
  auto [l1, u1] = lambda_window(1, Rational(1), mu);
  CHECK(l1 == 1 + Rational(3) / 99);
  CHECK(u1 == Rational(3) / (1 + Rational(3) / 99));
}

TEST_CASE("select_params yields a strict rational window") {
  for (int d : {1, 2, 3, 4}) {
    Rational alpha = d == 1 ? Rational(1) : Rational(d);  // below 3^(d/2) in all cases
    CircuitGameParams params = select_params(d, alpha);
    auto [lower, upper] = lambda_window(d, alpha, params.mu);
    CHECK(lower < params.lambda);
    CHECK(params.lambda < upper);
    CHECK(params.mu > 1 + 2 * pow3_half(3 * d).hi);
    CHECK(params.epsilon_mu > 0);
    // mu was chosen against the epsilon window too
    CHECK(params.epsilon_mu <= std::min((pow3_half(d).lo - alpha) / 2, Rational(1)));
  }
  CHECK_THROWS_AS(select_params(2, Rational(3)), AlphaTooLargeError);
  CHECK_THROWS_AS(select_params(1, Rational(2)), AlphaTooLargeError);
}

TEST_CASE("compile: smallest instance has 3 players and 2 resources") {
  CircuitGame cg = one_gate_game(Rational(1));
  CHECK(cg.game.num_players() == 3);
  CHECK(cg.game.num_resources() == 2);
  CHECK(cg.game.player(cg.static_player).strategies.size() == 1);
  for (const auto& p : cg.game.players()) CHECK(p.weight == Rational(1));  // unweighted

  // both input-side players on the one resource load it to 3
  StrategyProfile profile{CircuitGame::kOneStrategy, 0, CircuitGame::kOneStrategy};
  CHECK(load(cg.game, profile, cg.one_resource[0]) == Rational(3));
}

TEST_CASE("gate player strategies use at most k resources") {
  CircuitGame cg = compile_circuit_game(canonicalize(parse_circuit(fixtures::kFiveGate)),
                                        select_params(2, Rational(1)));
  for (int k = 0; k < cg.circuit.num_gates(); ++k) {
    const auto& player = cg.game.player(cg.gate_players[k]);
    for (const auto& s : player.strategies) CHECK(static_cast<int>(s.size()) <= k + 1);
  }
}

TEST_CASE("one-gate game has exactly the two NAND-respecting equilibria") {
  for (const Rational& alpha : {Rational(1), Rational(2)}) {
    CircuitGame cg = one_gate_game(alpha);
    OracleReport report = enumerate_pne(cg.game, alpha);
    REQUIRE(report.count() == 2);
    for (const auto& profile : report.pne) CHECK(follows_nand(cg, profile));
    std::vector<StrategyProfile> expected = {extend_to_pne(cg, {false}), extend_to_pne(cg, {true})};
    std::sort(expected.begin(), expected.end());
    CHECK(report.pne == expected);
  }
}

TEST_CASE("follows_nand detects violations") {
  CircuitGame cg = one_gate_game(Rational(1));
  StrategyProfile good = extend_to_pne(cg, {true});
  CHECK(follows_nand(cg, good));
  StrategyProfile bad = good;
  bad[cg.gate_players[0]] = 1 - bad[cg.gate_players[0]];
  CHECK(!follows_nand(cg, bad));
  CHECK(!is_alpha_pne(cg.game, bad, cg.params.alpha));
}

TEST_CASE("extend_to_pne matches the circuit outputs and the oracle") {
  for (const char* netlist : {fixtures::kOr, fixtures::kAnd}) {
    CanonicalCircuit canon = canonicalize(parse_circuit(netlist));
    CircuitGameParams params = select_params(2, Rational(3, 2));
    CircuitGame cg = compile_circuit_game(canon, params);

    std::vector<StrategyProfile> expected;
    for (const auto& x : all_assignments(canon.num_inputs)) {
      StrategyProfile profile = extend_to_pne(cg, x);
      CHECK(follows_nand(cg, profile));
      bool output_bit = profile[cg.output_player()] == CircuitGame::kOneStrategy;
      CHECK(output_bit == evaluate(canon, x));
      CHECK(is_alpha_pne(cg.game, profile, Rational(1)));
      expected.push_back(profile);
    }
    std::sort(expected.begin(), expected.end());

    for (const Rational& alpha : {Rational(1), params.alpha}) {
      OracleReport report = enumerate_pne(cg.game, alpha);
      CHECK(report.pne == expected);  // unique PNE per assignment, gap property
    }
  }
}

TEST_CASE("input players are locked by the lambda window") {
  CircuitGame cg = one_gate_game(Rational(2));
  const Rational alpha = cg.params.alpha;
  for (bool bit : {false, true}) {
    StrategyProfile profile = extend_to_pne(cg, {bit});
    CHECK(is_alpha_dominating(cg.game, profile, cg.input_players[0], alpha));
    // the locking costs are exactly the displayed ones
    Rational current = player_cost(cg.game, profile, cg.input_players[0]);
    Rational other = deviation_cost(cg.game, profile, cg.input_players[0],
                                    1 - profile[cg.input_players[0]]);
    const Rational mu = cg.params.mu, lambda = cg.params.lambda;
    if (!bit) {
      CHECK(current == lambda * mu);      // c0_1(1)
      CHECK(other == mu * Rational(9));   // c1_1(3) = mu 3^d at d = 2
    } else {
      CHECK(current == mu * Rational(4));   // c1_1(2)
      CHECK(other == lambda * mu * Rational(4));
    }
  }
}

TEST_CASE("thm2 instances answer satisfiability on the suite") {
  const Rational alpha(3, 2);
  for (const auto& entry : fixtures::circuit_suite()) {
    Circuit raw = parse_circuit(entry.netlist);
    for (Thm2Kind kind : {Thm2Kind::SubsetProfile, Thm2Kind::ResourceUsed, Thm2Kind::CostAtMost}) {
      Thm2Instance instance = thm2_instance(kind, raw, 2, alpha);
      CHECK(instance.expected == (entry.sat_count > 0));
      OracleReport report = enumerate_pne(instance.cgame.game, alpha);
      CHECK(thm2_answer(instance, report.pne) == instance.expected);
    }
  }
}

TEST_CASE("thm2 cost-at-most certificates are exact") {
  const Rational alpha(3, 2);
  Thm2Instance sat = thm2_instance(Thm2Kind::CostAtMost, parse_circuit(fixtures::kOr), 2, alpha);
  CHECK(sat.expected);
  OracleReport sat_report = enumerate_pne(sat.cgame.game, alpha);
  bool seen_yes = false;
  for (const auto& profile : sat_report.pne) {
    Rational cost = player_cost(sat.cgame.game, profile, sat.query_player);
    if (cost == sat.yes_cost) seen_yes = true;
    CHECK((cost == sat.yes_cost || cost == sat.no_cost));
  }
  CHECK(seen_yes);

  Thm2Instance unsat =
      thm2_instance(Thm2Kind::CostAtMost, parse_circuit(fixtures::kUnsat), 2, alpha);
  CHECK(!unsat.expected);
  for (const auto& profile : enumerate_pne(unsat.cgame.game, alpha).pne)
    CHECK(player_cost(unsat.cgame.game, profile, unsat.query_player) == unsat.no_cost);
}

TEST_CASE("thm2 cost rescaling brackets an arbitrary z") {
  const Rational alpha(3, 2), z(1, 7);
  Thm2Instance instance =
      thm2_instance(Thm2Kind::CostAtMost, parse_circuit(fixtures::kOr), 2, alpha, &z);
  CHECK(instance.z == z);
  CHECK(instance.yes_cost < z);
  CHECK(z < instance.no_cost);
  OracleReport report = enumerate_pne(instance.cgame.game, alpha);
  CHECK(thm2_answer(instance, report.pne));
}

TEST_CASE("thm2 resource query uses a fresh zero-cost resource") {
  const Rational alpha(2);
  Thm2Instance instance =
      thm2_instance(Thm2Kind::ResourceUsed, parse_circuit(fixtures::kUnsat), 2, alpha);
  CHECK(!instance.expected);
  CHECK(instance.cgame.game.cost(instance.query_resource)(Rational(5)) == Rational(0));
  OracleReport report = enumerate_pne(instance.cgame.game, alpha);
  CHECK(report.count() == 4);  // one locked equilibrium per input assignment
  CHECK(!thm2_answer(instance, report.pne));
}
