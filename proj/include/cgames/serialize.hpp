#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cgames/game.hpp"
#include "cgames/gadget_circuit.hpp"
#include "cgames/oracle.hpp"

namespace cgames {

using Json = nlohmann::ordered_json;

// Game file format (JSON, UTF-8). Rationals are "num/den" strings; the
// round-trip through parse/serialize is exact.
//
// {
//   "resources": { "<id>": {"kind":"poly","coeffs":["1/1","0/1","2/3"]}
//                | {"kind":"step","points":[["1/2","1/1"], ...]}, ... },
//   "players":   [ {"id":"...","weight":"1/1","strategies":[["a","b"],["c"]]}, ... ],
//   "degree_bound": 2            // optional
//   "meta": { ... }              // optional, preserved verbatim
// }
Json game_to_json(const Game& game);
Game game_from_json(const Json& j);

std::string serialize_game(const Game& game);
Game parse_game(const std::string& text);

void write_game_file(const Game& game, const std::string& path, const Json& meta = Json());
Game read_game_file(const std::string& path, Json* meta = nullptr);

Json canonical_to_json(const CanonicalCircuit& circuit);
CanonicalCircuit canonical_from_json(const Json& j);

Json params_to_json(const CircuitGameParams& params);
CircuitGameParams params_from_json(const Json& j);

Json report_to_json(const OracleReport& report);
Json threshold_to_json(const ThresholdReport& report);
Json dynamics_to_json(const DynamicsTrace& trace);

StrategyProfile parse_profile(const std::string& comma_separated, const Game& game);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cgames
