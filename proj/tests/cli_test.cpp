#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cgames/serialize.hpp"
#include "fixtures.hpp"

using namespace cgames;
namespace fs = std::filesystem;

namespace {

const std::string kCli = CGAMES_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cgames_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const TempDir& dir, std::string* output = nullptr) {
  std::string log = dir.file("last_output.txt");
  int status = std::system((kCli + " " + args + " > " + log + " 2>&1").c_str());
  if (output) *output = read_text_file(log);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli: gadget, oracle, and round-trip determinism") {
  TempDir dir;
  std::string game = dir.file("gadget.json");
  REQUIRE(run("gadget poly --d 2 --n 1 --k 1 --w 2/7 --beta 59/100 --out " + game, dir) == 0);

  std::string first, second;
  REQUIRE(run("oracle enumerate --game " + game + " --alpha 1 --out " + dir.file("r1.json"),
              dir, &first) == 0);
  // round-trip the game file and enumerate again: identical report
  Game g = read_game_file(game);
  write_game_file(g, dir.file("copy.json"));
  REQUIRE(run("oracle enumerate --game " + dir.file("copy.json") + " --alpha 1 --out " +
                  dir.file("r2.json"),
              dir, &second) == 0);
  CHECK(read_text_file(dir.file("r1.json")) == read_text_file(dir.file("r2.json")));

  std::string threshold_out;
  REQUIRE(run("oracle threshold --game " + game + " --format text", dir, &threshold_out) == 0);
  CHECK(threshold_out.find("9679/9191") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with status 2") {
  TempDir dir;
  CHECK(run("oracle enumerate --game missing-option-alpha.json", dir) == 2);
  CHECK(run("no-such-command", dir) == 2);
}

TEST_CASE("cli: verification failures exit with status 1") {
  TempDir dir;
  std::string game = dir.file("gadget.json");
  REQUIRE(run("gadget poly --d 2 --n 1 --k 1 --w 2/7 --beta 59/100 --out " + game, dir) == 0);
  std::string circuit = dir.file("or.net");
  write_text_file(circuit, fixtures::kOr);
  // alpha far above the core threshold: merge must refuse
  CHECK(run("merge --circuit " + circuit + " --core-game " + game + " --d 2 --alpha 199/100 --out " +
                dir.file("m.json"),
            dir) == 1);
  // budget refusal
  CHECK(run("oracle enumerate --game " + game + " --alpha 1 --budget 2", dir) == 1);
}

TEST_CASE("cli: merge then enumerate pipeline counts satisfying assignments") {
  TempDir dir;
  std::string game = dir.file("core.json");
  REQUIRE(run("gadget poly --d 2 --n 1 --k 1 --w 2/7 --beta 59/100 --out " + game, dir) == 0);
  std::string circuit = dir.file("or.net");
  write_text_file(circuit, fixtures::kOr);
  std::string merged = dir.file("merged.json");
  REQUIRE(run("merge --circuit " + circuit + " --core-game " + game +
                  " --d 2 --alpha 21/20 --out " + merged,
              dir) == 0);

  std::string report_path = dir.file("report.json");
  REQUIRE(run("oracle enumerate --game " + merged + " --alpha 21/20 --out " + report_path, dir) ==
          0);
  Json report = Json::parse(read_text_file(report_path));
  CHECK(report.at("count").get<int>() == 3);  // x1 OR x2 has three satisfying assignments

  std::string verify_out;
  CHECK(run("verify parsimony --merged " + merged + " --circuit " + circuit, dir, &verify_out) ==
        0);
  CHECK(verify_out.find("\"bijection\": true") != std::string::npos);
}

TEST_CASE("cli: circuit eval and canon") {
  TempDir dir;
  std::string circuit = dir.file("five.net");
  write_text_file(circuit, fixtures::kFiveGate);
  std::string out;
  REQUIRE(run("circuit eval --file " + circuit + " --input 10", dir, &out) == 0);
  CHECK(out.find("1") != std::string::npos);
  REQUIRE(run("circuit eval --file " + circuit + " --input 00", dir, &out) == 0);
  CHECK(out[0] == '0');
  REQUIRE(run("circuit canon --file " + circuit + " --out " + dir.file("canon.json"), dir) == 0);
  Json canon = Json::parse(read_text_file(dir.file("canon.json")));
  CHECK(canon.at("gates").size() == 5);
}

TEST_CASE("cli: frontier general emits certified bounds") {
  TempDir dir;
  std::string csv_path = dir.file("phi.csv");
  REQUIRE(run("frontier general --n-max 4 --out " + csv_path, dir) == 0);
  std::string csv = read_text_file(csv_path);
  CHECK(csv.find("n,xi_bar,xi_bar_exact") != std::string::npos);
  CHECK(csv.find("1.618033988") != std::string::npos);
}

TEST_CASE("cli: thm2 emits a game and a query descriptor") {
  TempDir dir;
  std::string circuit = dir.file("unsat.net");
  write_text_file(circuit, fixtures::kUnsat);
  REQUIRE(run("thm2 --kind cost --file " + circuit + " --d 2 --alpha 3/2 --out-game " +
                  dir.file("g.json") + " --out-query " + dir.file("q.json"),
              dir) == 0);
  Json query = Json::parse(read_text_file(dir.file("q.json")));
  CHECK(query.at("expected").get<bool>() == false);
  CHECK(query.at("kind") == "cost");
  Game g = read_game_file(dir.file("g.json"));
  CHECK(g.num_players() > 0);
}
