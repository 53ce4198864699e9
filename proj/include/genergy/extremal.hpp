#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "genergy/graph.hpp"

namespace genergy {

enum class SearchMethod { exhaustive, local };

struct SearchResult {
  std::size_t n = 0;
  Graph best_graph{1};
  double best_energy = 0.0;
  double km_absolute = 0.0;  // (n/2)(1 + sqrt(n))
  double ratio = 0.0;        // best_energy / km_absolute
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> seed;
};

/// (n/2)(1 + sqrt(n)).
double km_absolute_bound(std::size_t n);

/// Flips below this gain do not count as improvements.
inline constexpr double improvement_threshold = 1e-9;

/// Maximum energy over all labeled graphs on 2 <= n <= 6 vertices; ties go
/// to the earliest graph in enumeration order. OpenMP over masks.
SearchResult exhaustive_max_energy(std::size_t n);

/// Single-threaded reference for exhaustive_max_energy.
SearchResult exhaustive_max_energy_serial(std::size_t n);

/// Steepest-ascent edge-flip hill climbing with restarts. The first start is
/// K_n; restart r >= 1 starts from sample_gnp_half(n, derive_seed(seed, r)).
/// Every step scans all n(n-1)/2 flips, takes the largest gain (lowest pair
/// index on ties), and restarts once no flip gains more than
/// improvement_threshold. `iterations` is the budget of energy evaluations:
/// a scan only starts when the remaining budget covers all of it.
/// Flip candidates are evaluated in parallel under OpenMP.
SearchResult local_search_max_energy(std::size_t n, std::uint64_t seed, std::uint64_t iterations);

/// Single-threaded reference for local_search_max_energy.
SearchResult local_search_max_energy_serial(std::size_t n, std::uint64_t seed,
                                            std::uint64_t iterations);

}  // namespace genergy
