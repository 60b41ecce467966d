#pragma once

#include <vector>

#include "cgames/gadget_circuit.hpp"
#include "cgames/oracle.hpp"

namespace cgames {

// Certified enclosure of Phi_m, the unique positive root of (x+1)^m = x^(m+1),
// obtained by bisection with exact polynomial sign evaluations.
struct PhiApprox {
  int m;
  Rational lower, upper;
};

PhiApprox phi(int m, const Rational& tolerance);

// Exact check of the n-approximate-potential inequality
//   C(s_i', s_-i) - C(s) <= n C_i(s_i', s_-i) - C_i(s)
// together with the per-player bound C_j(s_i', s_-i) - C_j(s) <= C_i(s_i', s_-i).
struct PotentialReport {
  Rational social_delta;
  Rational potential_bound;
  bool holds = false;
  struct PerPlayer {
    int j;
    Rational delta;
    Rational bound;
    bool ok;
  };
  std::vector<PerPlayer> others;
  bool all_per_player_ok = false;
};

PotentialReport potential_certificate(const Game& game, const StrategyProfile& profile, int i,
                                      int alt);

// The n-player step-cost game with no alpha-PNE for rational alpha < xi_bar,
// where xi_bar is a rational lower bound of Phi_(n-1). Player i has weight
// 1/2^i; resource pair (a_i, b_i) shares a one-breakpoint step cost.
struct GeneralGadget {
  Game game;
  int n;
  Rational xi_bar;
  PhiApprox phi_enclosure;
};

GeneralGadget build_general_gadget(int n,
                                   const Rational& tolerance = Rational(1, 1000000000));

// The general-cost hardness construction: the circuit game of the negated
// circuit, a half-weight copy of the step gadget, and a dummy resource whose
// step value is xi_bar^2.
struct GeneralMergedGame {
  Game game;
  CircuitGame circuit_part;
  int n = 0;
  int d = 0;
  Rational xi_bar;
  Rational alpha_tilde;

  int num_circuit_players = 0;
  std::vector<int> core_players;
  std::vector<int> core_dummy_strategy;
  int dummy_resource = -1;
  int output_player = -1;
};

GeneralMergedGame merge_general(const Circuit& circuit, int n, const Rational& alpha_tilde);

// Certified lower bounds xi_bar = Phi_(n-1) for n = 2..n_max.
std::vector<std::pair<int, Rational>> frontier_general(
    int n_max, const Rational& tolerance = Rational(1, 1000000000));

}  // namespace cgames
