#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "genergy");
  std::ostringstream out, err;
  const int code = genergy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const auto dir = fs::temp_directory_path() / "genergy_cli_tests";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

std::vector<std::string> keys_of(const nlohmann::ordered_json& j) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  return keys;
}

}  // namespace

TEST_CASE("energy subcommand") {
  const auto id2 = scratch("id2.txt", "2 2\n1 0\n0 1\n");
  auto r = run({"energy", "--matrix", id2.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "2.0\n");

  r = run({"energy", "--family", "petersen", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["energy"].get<double>() == doctest::Approx(16.0));

  r = run({"energy", "--family", "complete_bipartite:2:3"});
  CHECK(r.out == "4.89897948557\n");
}

TEST_CASE("certify subcommand") {
  const auto k4 = scratch("k4.edges", run({"family", "--family", "complete:4"}).out);
  auto r = run({"certify", "--graph", k4.string(), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys_of(j) == std::vector<std::string>{"energy", "bounds", "violations", "tolerance"});
  CHECK(j["energy"].get<double>() == doctest::Approx(6.0));
  CHECK(j["violations"].empty());
  CHECK(j["bounds"].size() == 7);
  for (const auto& b : j["bounds"]) {
    CHECK(keys_of(b) == std::vector<std::string>{"name", "applicable", "value", "diagnostics"});
    CHECK(b["value"].is_null() == !b["applicable"].get<bool>());
  }

  r = run({"certify", "--matrix", scratch("a.txt", "2 2\n1 0\n0 0\n").string(), "--format", "json"});
  const auto sparse = nlohmann::json::parse(r.out);
  CHECK(sparse["bounds"][2]["name"] == "THM1_UPPER");
  CHECK(sparse["bounds"][2]["value"].is_null());

  // Negative slack makes the tight K_4 bounds count as violations: exit 2.
  r = run({"certify", "--family", "complete:4", "--tolerance", "-0.001"});
  CHECK(r.code == 1);  // rejected: tolerance must be nonnegative
  r = run({"certify", "--family", "complete:4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations: none") != std::string::npos);
}

TEST_CASE("bounds and family subcommands") {
  auto r = run({"bounds", "--family", "cycle:4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["bounds"].size() == 7);

  r = run({"family", "--family", "path:3"});
  CHECK(r.out == "3\n0 1\n1 2\n");

  const auto out = fs::temp_directory_path() / "genergy_cli_tests" / "pet.edges";
  r = run({"family", "--family", "petersen", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first == "10");
}

TEST_CASE("montecarlo, histogram and search subcommands") {
  auto r = run({"montecarlo", "--n", "20", "--trials", "3", "--seed", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(keys_of(j) == std::vector<std::string>{"n", "trials", "seed", "mean_energy_ratio",
                                               "mean_sigma1_ratio", "max_sigma2_ratio", "per_trial"});
  CHECK(j["per_trial"].size() == 3);
  CHECK(run({"montecarlo", "--n", "20", "--trials", "3", "--seed", "5", "--format", "json"}).out == r.out);

  r = run({"histogram", "--family", "complete:2", "--bins", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("bin_lo,bin_hi,mass,reference_mass\n-1.25,0,0.5,", 0) == 0);
  r = run({"histogram", "--n", "50", "--seed", "3", "--bins", "10"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);

  r = run({"search", "--n", "4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["best_energy"].get<double>() == doctest::Approx(6.0));
  r = run({"search", "--n", "8", "--seed", "2", "--iterations", "300", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["method"] == "local");
  CHECK(run({"search", "--n", "9", "--method", "exhaustive"}).code == 1);
}

TEST_CASE("usage errors exit 1 with a diagnostic") {
  CHECK(run({}).code == 1);
  auto r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(r.err.find("frobnicate") != std::string::npos);
  r = run({"energy", "--family", "complete:3", "--bogus", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = run({"energy", "--matrix", "/nonexistent/m.txt"});
  CHECK(r.code == 1);
  CHECK(r.err.find("/nonexistent/m.txt") != std::string::npos);
  r = run({"energy", "--graph", scratch("bad.edges", "3\n0 1\n1 1\n").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"energy"}).code == 1);
  CHECK(run({"energy", "--family", "complete:3", "--graph", "x"}).code == 1);
  CHECK(run({"energy", "--family", "complete:3", "--format", "xml"}).code == 1);
}

TEST_CASE("help lists flags with defaults") {
  for (const std::string sub : {"energy", "certify", "bounds", "family", "montecarlo", "histogram", "search"}) {
    const auto r = run({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--out") != std::string::npos);
  }
  const auto mc = run({"montecarlo", "--help"}).out;
  CHECK(mc.find("[8]") != std::string::npos);
  CHECK(mc.find("[1]") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
