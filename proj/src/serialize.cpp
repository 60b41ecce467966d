#include "cgames/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cgames {

namespace {

Json cost_to_json(const CostFunction& cost) {
  Json j;
  if (cost.is_polynomial()) {
    j["kind"] = "poly";
    Json coeffs = Json::array();
    for (const auto& c : cost.poly().coeffs) coeffs.push_back(to_fraction_string(c));
    j["coeffs"] = coeffs;
  } else {
    j["kind"] = "step";
    Json points = Json::array();
    for (const auto& [t, v] : cost.step_points().points)
      points.push_back(Json::array({to_fraction_string(t), to_fraction_string(v)}));
    j["points"] = points;
  }
  return j;
}

CostFunction cost_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "poly") {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CostFunction::polynomial(std::move(coeffs));
  }
  if (kind == "step") {
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& p : j.at("points"))
      points.emplace_back(parse_rational(p.at(0).get<std::string>()),
                          parse_rational(p.at(1).get<std::string>()));
    return CostFunction::step(std::move(points));
  }
  throw std::invalid_argument("unknown cost kind: " + kind);
}

}  // namespace

Json game_to_json(const Game& game) {
  Json j;
  Json resources = Json::object();
  for (int e = 0; e < game.num_resources(); ++e)
    resources[game.resource_name(e)] = cost_to_json(game.cost(e));
  j["resources"] = resources;

  Json players = Json::array();
  for (const auto& p : game.players()) {
    Json jp;
    jp["id"] = p.id;
    jp["weight"] = to_fraction_string(p.weight);
    Json strategies = Json::array();
    for (const auto& s : p.strategies) {
      Json strat = Json::array();
      for (int e : s) strat.push_back(game.resource_name(e));
      strategies.push_back(strat);
    }
    jp["strategies"] = strategies;
    players.push_back(jp);
  }
  j["players"] = players;
  if (game.degree_bound) j["degree_bound"] = *game.degree_bound;
  return j;
}

Game game_from_json(const Json& j) {
  Game game;
  for (const auto& [name, jcost] : j.at("resources").items())
    game.add_resource(name, cost_from_json(jcost));
  for (const auto& jp : j.at("players")) {
    int p = game.add_player(jp.at("id").get<std::string>(),
                            parse_rational(jp.at("weight").get<std::string>()));
    for (const auto& js : jp.at("strategies")) {
      Strategy strat;
      for (const auto& jname : js) {
        int e = game.resource_index(jname.get<std::string>());
        if (e < 0)
          throw std::invalid_argument("unknown resource id in strategy: " +
                                      jname.get<std::string>());
        strat.push_back(e);
      }
      game.add_strategy(p, std::move(strat));
    }
  }
  if (j.contains("degree_bound")) game.degree_bound = j.at("degree_bound").get<int>();
  game.validate();
  return game;
}

std::string serialize_game(const Game& game) { return game_to_json(game).dump(2) + "\n"; }

Game parse_game(const std::string& text) { return game_from_json(Json::parse(text)); }

void write_game_file(const Game& game, const std::string& path, const Json& meta) {
  Json j = game_to_json(game);
  if (!meta.is_null()) j["meta"] = meta;
  write_text_file(path, j.dump(2) + "\n");
}

Game read_game_file(const std::string& path, Json* meta) {
  Json j = Json::parse(read_text_file(path));
  if (meta) *meta = j.contains("meta") ? j.at("meta") : Json();
  return game_from_json(j);
}

namespace {

std::string ref_to_string(const CanonicalCircuit::Ref& ref) {
  using Kind = CanonicalCircuit::Ref::Kind;
  switch (ref.kind) {
    case Kind::One: return "one";
    case Kind::Input: return "x" + std::to_string(ref.index + 1);
    default: return "g" + std::to_string(ref.index + 1);
  }
}

CanonicalCircuit::Ref ref_from_string(const std::string& s) {
  using Ref = CanonicalCircuit::Ref;
  if (s == "one") return {Ref::Kind::One, -1};
  if (s.size() < 2) throw std::invalid_argument("bad canonical ref: " + s);
  int index = std::stoi(s.substr(1)) - 1;
  if (s[0] == 'x') return {Ref::Kind::Input, index};
  if (s[0] == 'g') return {Ref::Kind::Gate, index};
  throw std::invalid_argument("bad canonical ref: " + s);
}

}  // namespace

Json canonical_to_json(const CanonicalCircuit& circuit) {
  Json j;
  j["num_inputs"] = circuit.num_inputs;
  Json gates = Json::array();
  for (const auto& g : circuit.gates)
    gates.push_back(Json::array({ref_to_string(g.a), ref_to_string(g.b)}));
  j["gates"] = gates;
  return j;
}

CanonicalCircuit canonical_from_json(const Json& j) {
  CanonicalCircuit circuit;
  circuit.num_inputs = j.at("num_inputs").get<int>();
  for (const auto& g : j.at("gates"))
    circuit.gates.push_back(CanonicalCircuit::CGate{
        ref_from_string(g.at(0).get<std::string>()), ref_from_string(g.at(1).get<std::string>())});
  circuit.input_gate.assign(circuit.num_inputs, -1);
  for (int k = 0; k < circuit.num_gates(); ++k)
    for (auto ref : {circuit.gates[k].a, circuit.gates[k].b})
      if (ref.kind == CanonicalCircuit::Ref::Kind::Input) circuit.input_gate[ref.index] = k;
  for (int i = 0; i < circuit.num_inputs; ++i)
    if (circuit.input_gate[i] < 0)
      throw std::invalid_argument("canonical circuit json: input without a gate");
  return circuit;
}

Json params_to_json(const CircuitGameParams& params) {
  return Json{{"d", params.d},
              {"alpha", to_fraction_string(params.alpha)},
              {"mu", to_fraction_string(params.mu)},
              {"lambda", to_fraction_string(params.lambda)},
              {"epsilon_mu", to_fraction_string(params.epsilon_mu)}};
}

CircuitGameParams params_from_json(const Json& j) {
  return CircuitGameParams{j.at("d").get<int>(),
                           parse_rational(j.at("alpha").get<std::string>()),
                           parse_rational(j.at("mu").get<std::string>()),
                           parse_rational(j.at("lambda").get<std::string>()),
                           parse_rational(j.at("epsilon_mu").get<std::string>())};
}

Json report_to_json(const OracleReport& report) {
  Json j;
  j["alpha"] = to_fraction_string(report.alpha);
  j["count"] = report.count();
  Json pne = Json::array();
  for (const auto& profile : report.pne) pne.push_back(profile);
  j["pne"] = pne;
  return j;
}

Json threshold_to_json(const ThresholdReport& report) {
  Json j;
  j["threshold"] = report.threshold.str();
  j["argmin_profile"] = report.argmin;
  if (report.witness) {
    j["witness"] = Json{{"player", report.witness->player},
                        {"to_strategy", report.witness->to_strategy},
                        {"ratio", report.witness->ratio.str()}};
  }
  return j;
}

Json dynamics_to_json(const DynamicsTrace& trace) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"profile", s.from},
                         {"player", s.player},
                         {"to_strategy", s.to_strategy},
                         {"factor", s.factor.str()}});
  }
  j["steps"] = steps;
  j["terminal"] = trace.terminal;
  j["reached_pne"] = trace.reached_pne;
  return j;
}

StrategyProfile parse_profile(const std::string& comma_separated, const Game& game) {
  StrategyProfile profile;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) profile.push_back(std::stoi(item));
  if (static_cast<int>(profile.size()) != game.num_players())
    throw std::invalid_argument("profile length does not match player count");
  for (int i = 0; i < game.num_players(); ++i)
    if (profile[i] < 0 || profile[i] >= static_cast<int>(game.player(i).strategies.size()))
      throw std::invalid_argument("strategy index out of range in profile");
  return profile;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace cgames
