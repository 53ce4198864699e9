#include <doctest.h>

#include <cmath>

#include "genergy/bounds.hpp"
#include "genergy/error.hpp"
#include "genergy/extremal.hpp"
#include "genergy/report_json.hpp"

using namespace genergy;

TEST_CASE("exhaustive_max_energy") {
  auto r = exhaustive_max_energy(2);
  CHECK(r.best_graph == complete(2));
  CHECK(r.best_energy == doctest::Approx(2.0));
  CHECK(r.evaluations == 2);
  CHECK_FALSE(r.seed.has_value());

  r = exhaustive_max_energy(4);
  CHECK(std::abs(r.best_energy - 6.0) <= 1e-7);
  CHECK(r.best_graph == complete(4));
  CHECK(r.evaluations == 64);

  // Snapshot, cross-checked against an independent numpy enumeration of all
  // 1024 graphs: K_5 is the unique maximizer with energy 8.
  r = exhaustive_max_energy(5);
  CHECK(std::abs(r.best_energy - 8.0) <= 1e-9);
  CHECK(r.best_graph == complete(5));
  CHECK(r.ratio <= 1.0 + 1e-7);
  CHECK(std::abs(r.ratio - r.best_energy / r.km_absolute) <= 1e-12);

  CHECK_THROWS_AS(exhaustive_max_energy(1), GuardError);
  CHECK_THROWS_AS(exhaustive_max_energy(7), GuardError);
}

TEST_CASE("exhaustive: parallel kernel matches the serial reference") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(to_json(exhaustive_max_energy(n)).dump() == to_json(exhaustive_max_energy_serial(n)).dump());
  }
}

TEST_CASE("local_search_max_energy") {
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    const auto r = local_search_max_energy(4, seed, 200);
    CHECK(std::abs(r.best_energy - 6.0) <= 1e-7);
    CHECK(r.evaluations <= 200);
    CHECK(r.seed == seed);
  }
  const auto a = local_search_max_energy(9, 3, 400);
  const auto b = local_search_max_energy(9, 3, 400);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() == to_json(local_search_max_energy_serial(9, 3, 400)).dump());

  const auto big = local_search_max_energy(20, 7, 5000);
  CHECK(big.ratio > 0.0);
  CHECK(big.ratio <= 1.0);
  CHECK(big.best_energy >= graph_energy(complete(20)) - 1e-9);
  CHECK(std::abs(graph_energy(big.best_graph) - big.best_energy) <= 1e-9);

  CHECK_THROWS_AS(local_search_max_energy(1, 0, 10), GuardError);
  CHECK_THROWS_AS(local_search_max_energy(5, 0, 0), GuardError);
  // A budget of one evaluation still reports K_n.
  CHECK(local_search_max_energy(5, 0, 1).best_graph == complete(5));
}

TEST_CASE("local search never beats the exhaustive maximum") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const double exact = exhaustive_max_energy(n).best_energy;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto r = local_search_max_energy(n, seed, 1000);
      CHECK(r.best_energy <= exact + 1e-7);
      CHECK(r.best_energy <= r.km_absolute + 1e-7);
      CHECK(std::abs(graph_energy(r.best_graph) - r.best_energy) <= 1e-9);
    }
  }
}

TEST_CASE("SearchResult JSON layout") {
  const auto j = to_json(exhaustive_max_energy(3));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "method", "best_energy", "km_absolute", "ratio",
                                         "evaluations", "seed", "best_graph"});
  CHECK(j["seed"].is_null());
  CHECK(j["method"] == "exhaustive");
  CHECK(j["best_graph"] == "3\n0 1\n0 2\n1 2\n");
}
