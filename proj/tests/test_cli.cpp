#include "doctest.h"

#include "crosscap/cli.hpp"
#include "crosscap/json_io.hpp"
#include "crosscap/obstruction.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), {"crosscap", "--catalog", CROSSCAP_TEST_CATALOG});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return (fs::path(CROSSCAP_TEST_DATA) / rel).string(); }

fs::path write_temp(const std::string& name, const io::json& j) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

}  // namespace

TEST_CASE("analyze prints the interval") {
  const Run r = cli({"analyze", "6_3^2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("crosscap = [3,3]") != std::string::npos);
  CHECK(r.out.find("Obstructed") != std::string::npos);

  CHECK(cli({"analyze", "Hopf"}).out.find("crosscap = [2,2]") != std::string::npos);
  CHECK(cli({"analyze", "T(2,10)"}).out.find("crosscap = [2,2]") != std::string::npos);
  CHECK(cli({"analyze", "3_1o3_1"}).out.find("crosscap = [3,3]") != std::string::npos);
}

TEST_CASE("analyze as JSON") {
  const Run r = cli({"--format", "json", "analyze", "6_3^2"});
  REQUIRE(r.code == 0);
  const auto j = io::json::parse(r.out);
  CHECK(j["interval"]["lower"] == 3);
  CHECK(j["interval"]["upper"] == 3);
  CHECK(j["min_generators"] == 1);
  CHECK(j["orientations"].size() == 2);
  CHECK(j["obstruction"]["verdict"] == "Obstructed");
}

TEST_CASE("analyze --file with a catalog-format entry") {
  const io::json entry = io::read_file(fs::path(CROSSCAP_TEST_CATALOG) / "links" / "l6_2_2.json");
  const fs::path p = write_temp("crosscap_mylink.json", entry);
  const Run r = cli({"--file", p.string(), "analyze"});
  CHECK(r.code == 0);
  CHECK(r.out.find("crosscap = [2,2]") != std::string::npos);

  // A Seifert matrix whose signature contradicts the diagram is an internal
  // inconsistency, not an input error.
  io::json wrong = entry;
  const IntMatrix v = io::matrix_from_json(wrong["seifert"]["fwd"]["matrix"]);
  wrong["seifert"]["fwd"]["matrix"] = io::to_json(IntMatrix(-v));
  const fs::path q = write_temp("crosscap_wrong_seifert.json", wrong);
  const Run bad = cli({"--file", q.string(), "analyze"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  fs::remove(p);
  fs::remove(q);
}

TEST_CASE("obstruct output matches the library") {
  const Run r = cli({"--format", "json", "obstruct", "--invariants", data("invariants/6_3_2.json")});
  REQUIRE(r.code == 0);
  const ObstructionReport from_cli = io::report_from_json(io::json::parse(r.out));
  const ObstructionReport direct = beta2_obstruction(io::invariants_from_json(io::read_file(data("invariants/6_3_2.json"))));
  CHECK(from_cli == direct);

  const Run hopf = cli({"--file", data("invariants/hopf.json"), "obstruct"});
  CHECK(hopf.code == 0);
  CHECK(hopf.out.find("verdict: Consistent") != std::string::npos);
}

TEST_CASE("other subcommands") {
  const Run e = cli({"--format", "json", "enumerate-forms", "--det", "12"});
  REQUIRE(e.code == 0);
  CHECK(io::json::parse(e.out)["representatives"].size() == 4);

  const Run s = cli({"split-union", "7_4", "3_1"});
  CHECK(s.code == 0);
  CHECK(s.out.find('4') != std::string::npos);

  const Run snf = cli({"--format", "json", "snf", "[[2,4],[6,8]]"});
  CHECK(snf.code == 0);

  const Run sig = cli({"signature", "--seifert", "[[2,1,0],[0,1,0],[-1,0,1]]"});
  CHECK(sig.code == 0);
  CHECK(sig.out.find('3') != std::string::npos);

  CHECK(cli({"goeritz", "6_3^2", "--surface", "white"}).code == 0);
  CHECK(cli({"--format", "json", "bounds", "Hopf"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"enumerate-forms", "--det", "0"}).code == 1);
  CHECK(cli({"enumerate-forms", "--det", "twelve"}).code == 1);
  CHECK(cli({"enumerate-forms"}).code == 1);
  CHECK(cli({"analyze", "no-such-link"}).code == 1);
  CHECK(cli({"obstruct", "--invariants", data("invariants/infinite_h1.json")}).code == 1);
  CHECK(cli({"snf", "[[1,2],[3]]"}).code == 1);
  CHECK(cli({"signature", "[[1,2],[3,4]]"}).code == 1);
  CHECK(cli({"--format", "yaml", "analyze", "Hopf"}).code == 1);
  CHECK(cli({"nonsense"}).code == 1);
}

TEST_CASE("analyze finishes quickly") {
  const auto t0 = std::chrono::steady_clock::now();
  CHECK(cli({"analyze", "6_3^2"}).code == 0);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  CHECK(ms < 1000);
}
