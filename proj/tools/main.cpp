// cgames: exact toolkit for weighted congestion games — equilibrium oracle,
// gadget generators, circuit reductions, and nonexistence frontier tables.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cgames/enclosure.hpp"
#include "cgames/gadget_circuit.hpp"
#include "cgames/gadget_general.hpp"
#include "cgames/gadget_merge.hpp"
#include "cgames/gadget_poly.hpp"
#include "cgames/oracle.hpp"
#include "cgames/serialize.hpp"

namespace {

using namespace cgames;

struct GlobalOptions {
  std::string format = "json";
  int workers = 1;
  std::uint64_t budget;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CGAMES_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed CGAMES_BUDGET\n";
  }
  return std::uint64_t(1) << 24;
}

OracleConfig oracle_config(const GlobalOptions& opts) {
  return OracleConfig{opts.budget, opts.workers};
}

void emit(const GlobalOptions& opts, const Json& report, const std::string& summary,
          const std::string& out_path = "") {
  if (opts.format == "text")
    std::cout << summary << "\n";
  else
    std::cout << report.dump(2) << "\n";
  if (!out_path.empty()) write_text_file(out_path, report.dump(2) + "\n");
}

Circuit load_circuit(const std::string& path) { return parse_circuit(read_text_file(path)); }

std::string frontier_poly_csv(const std::vector<FrontierPoint>& points) {
  std::ostringstream csv;
  csv << "d,alpha_lower,alpha_lower_exact,n,k,w,beta\n";
  for (const auto& p : points) {
    csv << p.d << "," << to_decimal_string(p.alpha_lower, 18) << ","
        << to_fraction_string(p.alpha_lower) << "," << p.argmax.n << "," << p.argmax.k << ","
        << to_fraction_string(p.argmax.w) << "," << to_fraction_string(p.argmax.beta) << "\n";
  }
  return csv.str();
}

std::string frontier_general_csv(const std::vector<std::pair<int, Rational>>& rows) {
  std::ostringstream csv;
  csv << "n,xi_bar,xi_bar_exact\n";
  for (const auto& [n, xi] : rows)
    csv << n << "," << to_decimal_string(xi, 18) << "," << to_fraction_string(xi) << "\n";
  return csv.str();
}

Json merged_meta(const MergedGame& merged) {
  Json meta;
  meta["kind"] = "merged";
  meta["alpha"] = to_fraction_string(merged.alpha);
  meta["alpha_bar"] = to_fraction_string(merged.alpha_bar);
  meta["gamma"] = to_fraction_string(merged.gamma);
  meta["params"] = params_to_json(merged.circuit_part.params);
  meta["circuit"] = canonical_to_json(merged.circuit_part.circuit);
  return meta;
}

MergedGame merged_from_file(const std::string& path) {
  Json meta;
  Game game = read_game_file(path, &meta);
  if (meta.is_null() || meta.at("kind") != "merged")
    throw std::invalid_argument("not a merged game file: " + path);

  MergedGame merged;
  merged.game = std::move(game);
  merged.alpha = parse_rational(meta.at("alpha").get<std::string>());
  merged.alpha_bar = parse_rational(meta.at("alpha_bar").get<std::string>());
  merged.gamma = parse_rational(meta.at("gamma").get<std::string>());
  CanonicalCircuit circuit = canonical_from_json(meta.at("circuit"));
  merged.circuit_part =
      compile_circuit_game(circuit, params_from_json(meta.at("params")));
  merged.num_circuit_players = merged.circuit_part.game.num_players();
  merged.output_player = merged.circuit_part.output_player();
  merged.dummy_resource = merged.game.resource_index("dummy");
  if (merged.dummy_resource < 0) throw std::invalid_argument("merged game lost its dummy");
  for (int p = merged.num_circuit_players; p < merged.game.num_players(); ++p) {
    merged.core_players.push_back(p);
    merged.core_dummy_strategy.push_back(
        static_cast<int>(merged.game.player(p).strategies.size()) - 1);
  }
  return merged;
}

int run(int argc, char** argv) {
  CLI::App app{"exact congestion-game toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  opts.budget = default_budget();
  app.add_option("--format", opts.format, "output format: json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--workers", opts.workers, "worker threads for exhaustive scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", opts.budget, "profile budget for the oracle");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "exhaustive equilibrium analysis");
  oracle->require_subcommand(1);

  std::string game_path, alpha_str = "1", out_path, start_str;
  std::uint64_t max_steps = 1000;

  auto* enumerate = oracle->add_subcommand("enumerate", "list all alpha-PNE");
  enumerate->add_option("--game", game_path, "game file")->required();
  enumerate->add_option("--alpha", alpha_str, "approximation factor p/q")->required();
  enumerate->add_option("--out", out_path, "write the JSON report here");
  enumerate->callback([&] {
    Game game = read_game_file(game_path);
    OracleReport report = enumerate_pne(game, parse_rational(alpha_str), oracle_config(opts));
    emit(opts, report_to_json(report),
         "alpha-PNE count: " + std::to_string(report.count()), out_path);
  });

  auto* threshold = oracle->add_subcommand("threshold", "nonexistence threshold of a game");
  threshold->add_option("--game", game_path, "game file")->required();
  threshold->add_option("--out", out_path, "write the JSON report here");
  threshold->callback([&] {
    Game game = read_game_file(game_path);
    ThresholdReport report = nonexistence_threshold(game, oracle_config(opts));
    emit(opts, threshold_to_json(report), "threshold: " + report.threshold.str(), out_path);
  });

  auto* dynamics = oracle->add_subcommand("dynamics", "run alpha-improving dynamics");
  dynamics->add_option("--game", game_path, "game file")->required();
  dynamics->add_option("--alpha", alpha_str, "approximation factor p/q")->required();
  dynamics->add_option("--start", start_str, "start profile, e.g. 0,1,0")->required();
  dynamics->add_option("--max-steps", max_steps, "step limit");
  dynamics->callback([&] {
    Game game = read_game_file(game_path);
    DynamicsTrace trace = improving_dynamics(game, parse_profile(start_str, game),
                                             parse_rational(alpha_str), max_steps);
    emit(opts, dynamics_to_json(trace),
         "steps: " + std::to_string(trace.steps.size()) +
             (trace.reached_pne ? " (reached a PNE)" : " (step limit)"),
         out_path);
  });

  // ---- gadget ----
  auto* gadget = app.add_subcommand("gadget", "build nonexistence gadgets");
  gadget->require_subcommand(1);
  int opt_d = 2, opt_n = 1, opt_k = 1, opt_nn = 2;
  std::string w_str = "1", beta_str = "1", tol_str = "1/1000000000";

  auto* gadget_poly_cmd = gadget->add_subcommand("poly", "polynomial-cost gadget");
  gadget_poly_cmd->add_option("--d", opt_d, "degree")->required();
  gadget_poly_cmd->add_option("--n", opt_n, "light players")->required();
  gadget_poly_cmd->add_option("--k", opt_k, "exponent of the hub cost")->required();
  gadget_poly_cmd->add_option("--w", w_str, "light weight p/q")->required();
  gadget_poly_cmd->add_option("--beta", beta_str, "outer coefficient p/q")->required();
  gadget_poly_cmd->add_option("--out", out_path, "game file to write")->required();
  gadget_poly_cmd->callback([&] {
    GadgetParams params{opt_d, opt_n, opt_k, parse_rational(w_str), parse_rational(beta_str)};
    write_game_file(build_gadget(params), out_path);
    auto [r1, r2] = case_ratios(params);
    std::cout << "case ratios: " << to_fraction_string(r1) << ", " << to_fraction_string(r2)
              << "; min = " << to_decimal_string(std::min(r1, r2), 6) << "\n";
  });

  auto* gadget_general_cmd = gadget->add_subcommand("general", "step-cost gadget");
  gadget_general_cmd->add_option("--n", opt_nn, "player count")->required();
  gadget_general_cmd->add_option("--tol", tol_str, "Phi bisection tolerance");
  gadget_general_cmd->add_option("--out", out_path, "game file to write")->required();
  gadget_general_cmd->callback([&] {
    GeneralGadget gg = build_general_gadget(opt_nn, parse_rational(tol_str));
    Json meta{{"kind", "general-gadget"},
              {"n", gg.n},
              {"xi_bar", to_fraction_string(gg.xi_bar)}};
    write_game_file(gg.game, out_path, meta);
    std::cout << "xi_bar = " << to_decimal_string(gg.xi_bar, 12) << "\n";
  });

  // ---- frontier ----
  auto* frontier = app.add_subcommand("frontier", "nonexistence frontier tables");
  frontier->require_subcommand(1);
  int d_min = 2, d_max = 10, n_max = 20;
  bool coarse = false;

  auto* frontier_poly_cmd = frontier->add_subcommand("poly", "alpha(d) lower bounds");
  frontier_poly_cmd->add_option("--d-min", d_min, "first degree");
  frontier_poly_cmd->add_option("--d-max", d_max, "last degree");
  frontier_poly_cmd->add_option("--out", out_path, "CSV file to write");
  frontier_poly_cmd->add_flag("--coarse", coarse, "coarser search (for large d)");
  frontier_poly_cmd->callback([&] {
    std::vector<FrontierPoint> points;
    for (int d = d_min; d <= d_max; ++d) {
      SearchConfig config = (coarse || d > 24) ? SearchConfig::coarse() : SearchConfig();
      config.workers = opts.workers;
      FrontierPoint p = optimize_alpha(d, config);
      std::cout << "d=" << p.d << "  alpha(d) >= " << to_decimal_string(p.alpha_lower, 18)
                << "  (n=" << p.argmax.n << ", k=" << p.argmax.k << ", "
                << p.stats.evaluations << " evaluations)\n";
      points.push_back(std::move(p));
    }
    std::string csv = frontier_poly_csv(points);
    if (!out_path.empty()) write_text_file(out_path, csv);
    if (opts.format == "csv") std::cout << csv;
  });

  auto* frontier_general_cmd = frontier->add_subcommand("general", "Phi_(n-1) lower bounds");
  frontier_general_cmd->add_option("--n-max", n_max, "last player count");
  frontier_general_cmd->add_option("--tol", tol_str, "Phi bisection tolerance");
  frontier_general_cmd->add_option("--out", out_path, "CSV file to write");
  frontier_general_cmd->callback([&] {
    auto rows = frontier_general(n_max, parse_rational(tol_str));
    std::string csv = frontier_general_csv(rows);
    if (!out_path.empty()) write_text_file(out_path, csv);
    if (opts.format == "csv")
      std::cout << csv;
    else
      for (const auto& [n, xi] : rows)
        std::cout << "n=" << n << "  xi_bar=" << to_decimal_string(xi, 12) << "\n";
  });

  // ---- circuit ----
  auto* circuit_cmd = app.add_subcommand("circuit", "netlist utilities");
  circuit_cmd->require_subcommand(1);
  std::string circuit_path, input_bits;

  auto* circuit_eval = circuit_cmd->add_subcommand("eval", "evaluate a circuit");
  circuit_eval->add_option("--file", circuit_path, "netlist file")->required();
  circuit_eval->add_option("--input", input_bits, "input bits, e.g. 0101")->required();
  circuit_eval->callback([&] {
    Circuit c = load_circuit(circuit_path);
    Assignment x;
    for (char bit : input_bits) {
      if (bit != '0' && bit != '1') throw std::invalid_argument("input bits must be 0/1");
      x.push_back(bit == '1');
    }
    std::cout << (evaluate(c, x) ? 1 : 0) << "\n";
  });

  auto* circuit_canon = circuit_cmd->add_subcommand("canon", "canonical form (JSON)");
  circuit_canon->add_option("--file", circuit_path, "netlist file")->required();
  circuit_canon->add_option("--out", out_path, "canonical JSON to write")->required();
  circuit_canon->callback([&] {
    Circuit c = load_circuit(circuit_path);
    CanonicalCircuit canon = canonicalize(is_valid_form(c) ? c : make_valid(c));
    write_text_file(out_path, canonical_to_json(canon).dump(2) + "\n");
    std::cout << "gates: " << canon.num_gates() << ", inputs: " << canon.num_inputs << "\n";
  });

  // ---- compile ----
  auto* compile_cmd = app.add_subcommand("compile", "reductions from circuits");
  compile_cmd->require_subcommand(1);

  auto* compile_circuit_cmd = compile_cmd->add_subcommand("circuit", "lockable circuit game");
  compile_circuit_cmd->add_option("--file", circuit_path, "netlist file")->required();
  compile_circuit_cmd->add_option("--d", opt_d, "degree")->required();
  compile_circuit_cmd->add_option("--alpha", alpha_str, "target factor p/q")->required();
  compile_circuit_cmd->add_option("--out", out_path, "game file to write")->required();
  compile_circuit_cmd->callback([&] {
    Circuit c = load_circuit(circuit_path);
    CanonicalCircuit canon = canonicalize(is_valid_form(c) ? c : make_valid(c));
    CircuitGameParams params = select_params(opt_d, parse_rational(alpha_str));
    CircuitGame cg = compile_circuit_game(canon, params);
    Json meta{{"kind", "circuit-game"},
              {"params", params_to_json(params)},
              {"circuit", canonical_to_json(canon)}};
    write_game_file(cg.game, out_path, meta);
    std::cout << "players: " << cg.game.num_players() << ", mu = " << to_fraction_string(params.mu)
              << ", lambda = " << to_fraction_string(params.lambda) << "\n";
  });

  // ---- thm2 ----
  auto* thm2 = app.add_subcommand("thm2", "decision-problem instances");
  std::string kind_str = "subset", z_str, out_game, out_query;
  thm2->add_option("--kind", kind_str, "subset|resource|cost")
      ->check(CLI::IsMember({"subset", "resource", "cost"}));
  thm2->add_option("--file", circuit_path, "netlist file")->required();
  thm2->add_option("--d", opt_d, "degree")->required();
  thm2->add_option("--alpha", alpha_str, "target factor p/q")->required();
  thm2->add_option("--z", z_str, "cost bound for --kind cost");
  thm2->add_option("--out-game", out_game, "game file to write")->required();
  thm2->add_option("--out-query", out_query, "query descriptor to write")->required();
  thm2->callback([&] {
    Thm2Kind kind = kind_str == "subset"     ? Thm2Kind::SubsetProfile
                    : kind_str == "resource" ? Thm2Kind::ResourceUsed
                                             : Thm2Kind::CostAtMost;
    std::optional<Rational> z;
    if (!z_str.empty()) z = parse_rational(z_str);
    Thm2Instance instance =
        thm2_instance(kind, load_circuit(circuit_path), opt_d, parse_rational(alpha_str),
                      z ? &*z : nullptr);
    write_game_file(instance.cgame.game, out_game,
                    Json{{"kind", "thm2-game"},
                         {"params", params_to_json(instance.cgame.params)},
                         {"circuit", canonical_to_json(instance.cgame.circuit)}});
    Json query{{"kind", kind_str},
               {"alpha", alpha_str},
               {"expected", instance.expected}};
    if (instance.query_player >= 0)
      query["player"] = instance.cgame.game.player(instance.query_player).id;
    if (kind == Thm2Kind::SubsetProfile) query["strategy_index"] = instance.query_strategy;
    if (kind == Thm2Kind::ResourceUsed)
      query["resource"] = instance.cgame.game.resource_name(instance.query_resource);
    if (kind == Thm2Kind::CostAtMost) {
      query["z"] = to_fraction_string(instance.z);
      query["yes_cost"] = to_fraction_string(instance.yes_cost);
      query["no_cost"] = to_fraction_string(instance.no_cost);
    }
    write_text_file(out_query, query.dump(2) + "\n");
    std::cout << "expected answer: " << (instance.expected ? "YES" : "NO") << "\n";
  });

  // ---- merge ----
  auto* merge_cmd = app.add_subcommand("merge", "splice a circuit game onto a core game");
  std::string core_path;
  merge_cmd->add_option("--circuit", circuit_path, "netlist file")->required();
  merge_cmd->add_option("--core-game", core_path, "nonexistence game file")->required();
  merge_cmd->add_option("--d", opt_d, "degree")->required();
  merge_cmd->add_option("--alpha", alpha_str, "target factor p/q")->required();
  merge_cmd->add_option("--out", out_path, "merged game file to write")->required();
  merge_cmd->callback([&] {
    MergedGame merged = merge_games(load_circuit(circuit_path), opt_d, parse_rational(alpha_str),
                                    read_game_file(core_path), oracle_config(opts));
    write_game_file(merged.game, out_path, merged_meta(merged));
    std::cout << "merged game: " << merged.game.num_players() << " players, alpha_bar = "
              << to_fraction_string(merged.alpha_bar) << "\n";
  });

  // ---- merge-general ----
  auto* merge_general_cmd =
      app.add_subcommand("merge-general", "general-cost hardness construction");
  merge_general_cmd->add_option("--circuit", circuit_path, "netlist file")->required();
  merge_general_cmd->add_option("--n", opt_nn, "gadget player count")->required();
  merge_general_cmd->add_option("--alpha", alpha_str, "target factor p/q")->required();
  merge_general_cmd->add_option("--out", out_path, "merged game file to write")->required();
  merge_general_cmd->callback([&] {
    GeneralMergedGame merged =
        merge_general(load_circuit(circuit_path), opt_nn, parse_rational(alpha_str));
    Json meta{{"kind", "merged-general"},
              {"n", merged.n},
              {"d", merged.d},
              {"xi_bar", to_fraction_string(merged.xi_bar)},
              {"alpha", to_fraction_string(merged.alpha_tilde)},
              {"params", params_to_json(merged.circuit_part.params)},
              {"circuit", canonical_to_json(merged.circuit_part.circuit)}};
    write_game_file(merged.game, out_path, meta);
    std::cout << "merged game: " << merged.game.num_players()
              << " players, d = " << merged.d << "\n";
  });

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "check reduction properties");
  verify->require_subcommand(1);
  std::string merged_path;

  auto* verify_parsimony_cmd = verify->add_subcommand("parsimony", "sat-count vs PNE-count");
  verify_parsimony_cmd->add_option("--merged", merged_path, "merged game file")->required();
  verify_parsimony_cmd->add_option("--circuit", circuit_path, "original netlist")->required();
  verify_parsimony_cmd->callback([&] {
    MergedGame merged = merged_from_file(merged_path);
    Circuit c = load_circuit(circuit_path);
    CanonicalCircuit canon = canonicalize(is_valid_form(c) ? c : make_valid(c));
    if (!(canon == merged.circuit_part.circuit))
      throw std::invalid_argument("circuit does not match the merged game");
    ParsimonyReport at_alpha = verify_parsimony(merged, merged.alpha, oracle_config(opts));
    ParsimonyReport at_one = verify_parsimony(merged, Rational(1), oracle_config(opts));
    Json report{{"sat_count", at_alpha.sat_count},
                {"pne_count_alpha", at_alpha.pne_count},
                {"pne_count_exact", at_one.pne_count},
                {"bijection", at_alpha.bijection && at_one.bijection}};
    emit(opts, report,
         "sat=" + std::to_string(at_alpha.sat_count) +
             " pne=" + std::to_string(at_alpha.pne_count) +
             (at_alpha.bijection && at_one.bijection ? " (bijection)" : " (MISMATCH)"));
    if (!(at_alpha.bijection && at_one.bijection))
      throw std::runtime_error("parsimony check failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
