#pragma once

#include <string>
#include <vector>

#include "cgames/circuit.hpp"
#include "cgames/game.hpp"

namespace cgames {

// Rational stand-ins for the irrational gadget constants. mu exceeds both
// 1 + 2*3^(d+d/2) and 1 + 3^(d+d/2)/min(eps, 1); lambda sits strictly inside
// the window
//   alpha (1 + 3^d/(mu-1))  <  lambda  <  3^d / (alpha (1 + 3^d/(mu-1))),
// which is exactly what the locking inequalities need.
struct CircuitGameParams {
  int d;
  Rational alpha;
  Rational mu;
  Rational lambda;
  Rational epsilon_mu;  // certified upper bound of 3^(d+d/2)/(mu-1)
};

class AlphaTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requires alpha < certified lower bound of 3^(d/2); throws AlphaTooLargeError
// otherwise.
CircuitGameParams select_params(int d, const Rational& alpha);

// The exact lambda window endpoints for given (d, alpha, mu).
std::pair<Rational, Rational> lambda_window(int d, const Rational& alpha, const Rational& mu);

// The lockable game of a canonical circuit: one input player per bit, one
// static player for the constant one, one gate player per gate; resources 0_k
// and 1_k per gate with costs lambda mu^k x^d and mu^k x^d.
struct CircuitGame {
  Game game;
  CanonicalCircuit circuit;
  CircuitGameParams params;

  std::vector<int> input_players;   // player index per circuit input
  int static_player = -1;
  std::vector<int> gate_players;    // player index per gate (gate 0 = output)
  std::vector<int> zero_resource, one_resource;  // per gate

  static constexpr int kZeroStrategy = 0;
  static constexpr int kOneStrategy = 1;
  int output_player() const { return gate_players[0]; }
};

CircuitGame compile_circuit_game(const CanonicalCircuit& circuit, const CircuitGameParams& params);

// True iff every gate player's strategy matches the NAND of its two
// input-side players' bits (the static player always counts as one).
bool follows_nand(const CircuitGame& cg, const StrategyProfile& profile);

// The unique profile extending the given input bits where all gate players
// follow the NAND semantics.
StrategyProfile extend_to_pne(const CircuitGame& cg, const Assignment& x);

// Bit vector represented by the input players in a profile.
Assignment input_assignment(const CircuitGame& cg, const StrategyProfile& profile);

// The three decision problems built from a raw NAND circuit. The expected
// answer is the circuit's satisfiability, decided exhaustively.
enum class Thm2Kind { SubsetProfile, ResourceUsed, CostAtMost };

struct Thm2Instance {
  Thm2Kind kind;
  CircuitGame cgame;
  bool expected;

  // SubsetProfile: does some alpha-PNE have `player` on `strategy`?
  int query_player = -1;
  int query_strategy = -1;
  // ResourceUsed: does some alpha-PNE use this resource?
  int query_resource = -1;
  // CostAtMost: does some alpha-PNE give query_player cost at most z?
  Rational z = 0;
  Rational yes_cost = 0, no_cost = 0;  // the two certificate cost levels
};

Thm2Instance thm2_instance(Thm2Kind kind, const Circuit& raw, int d, const Rational& alpha,
                           const Rational* z = nullptr);

// Evaluates a Thm2 query against an enumerated alpha-PNE list.
bool thm2_answer(const Thm2Instance& instance, const std::vector<StrategyProfile>& pne);

}  // namespace cgames
