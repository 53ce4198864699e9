#include "genergy/extremal.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "genergy/ensemble.hpp"
#include "genergy/error.hpp"
#include "genergy/random.hpp"
#include "genergy/spectrum.hpp"

namespace genergy {

double km_absolute_bound(std::size_t n) {
  const double nd = static_cast<double>(n);
  return nd / 2.0 * (1.0 + std::sqrt(nd));
}

namespace {

using EdgeBits = std::vector<char>;

double energy_of_bits(std::size_t n, const EdgeBits& bits) {
  std::vector<double> a(n * n, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (bits[k]) a[i * n + j] = a[j * n + i] = 1.0;
  return singular_values_symmetric(DenseMatrix(n, n, std::move(a))).sum();
}

double graph_energy_of_mask(std::size_t n, std::uint64_t mask) {
  EdgeBits bits(pair_count(n));
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = static_cast<char>((mask >> k) & 1u);
  return energy_of_bits(n, bits);
}

EdgeBits bits_of(const Graph& g) {
  const std::size_t n = g.order();
  EdgeBits bits(pair_count(n), 0);
  for (const auto& [u, v] : g.edges()) bits[pair_index(n, u, v)] = 1;
  return bits;
}

Graph graph_of(std::size_t n, const EdgeBits& bits) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (bits[k]) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

SearchResult make_result(std::size_t n, Graph best, double best_energy, SearchMethod method,
                         std::uint64_t evaluations, std::optional<std::uint64_t> seed) {
  SearchResult r;
  r.n = n;
  r.best_graph = std::move(best);
  r.best_energy = best_energy;
  r.km_absolute = km_absolute_bound(n);
  r.ratio = best_energy / r.km_absolute;
  r.method = method;
  r.evaluations = evaluations;
  r.seed = seed;
  return r;
}

void check_exhaustive(std::size_t n) {
  if (n < 2 || n > LabeledGraphs::max_order) {
    throw GuardError("exhaustive search supports 2 <= n <= " +
                     std::to_string(LabeledGraphs::max_order) + ", got n = " + std::to_string(n));
  }
}

void check_local(std::size_t n, std::uint64_t iterations) {
  if (n < 2) throw GuardError("local search needs n >= 2");
  if (iterations < 1) throw GuardError("local search needs iterations >= 1");
}

// Gains of all single flips from `bits`, index k = pair index.
template <bool Parallel>
std::vector<double> flip_energies(std::size_t n, const EdgeBits& bits) {
  const auto count = static_cast<std::ptrdiff_t>(bits.size());
  std::vector<double> out(bits.size());
  if constexpr (Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      try {
        EdgeBits flipped = bits;
        flipped[k] ^= 1;
        out[k] = energy_of_bits(n, flipped);
      } catch (...) {
#pragma omp critical(genergy_flip_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      EdgeBits flipped = bits;
      flipped[k] ^= 1;
      out[k] = energy_of_bits(n, flipped);
    }
  }
  return out;
}

template <bool Parallel>
SearchResult local_search(std::size_t n, std::uint64_t seed, std::uint64_t iterations) {
  check_local(n, iterations);
  const std::uint64_t scan_cost = pair_count(n);
  std::uint64_t evaluations = 0;

  EdgeBits best_bits;
  double best_energy = -1.0;

  for (std::uint64_t restart = 0; evaluations < iterations; ++restart) {
    EdgeBits current =
        restart == 0 ? EdgeBits(scan_cost, 1) : bits_of(sample_gnp_half(n, derive_seed(seed, restart)));
    double current_energy = energy_of_bits(n, current);
    ++evaluations;
    if (current_energy > best_energy) {
      best_energy = current_energy;
      best_bits = current;
    }

    bool stop = false;
    while (true) {
      if (evaluations + scan_cost > iterations) {
        stop = true;
        break;
      }
      const auto energies = flip_energies<Parallel>(n, current);
      evaluations += scan_cost;
      std::size_t best_k = 0;
      for (std::size_t k = 1; k < energies.size(); ++k)
        if (energies[k] > energies[best_k]) best_k = k;
      if (energies[best_k] - current_energy <= improvement_threshold) break;
      current[best_k] ^= 1;
      current_energy = energies[best_k];
      if (current_energy > best_energy) {
        best_energy = current_energy;
        best_bits = current;
      }
    }
    if (stop) break;
  }
  return make_result(n, graph_of(n, best_bits), best_energy, SearchMethod::local, evaluations, seed);
}

}  // namespace

SearchResult exhaustive_max_energy_serial(std::size_t n) {
  check_exhaustive(n);
  const auto graphs = enumerate_graphs(n);
  std::uint64_t best_mask = 0;
  double best_energy = -1.0;
  for (std::uint64_t mask = 0; mask < graphs.count(); ++mask) {
    const double e = graph_energy_of_mask(n, mask);
    if (e > best_energy) {
      best_energy = e;
      best_mask = mask;
    }
  }
  return make_result(n, graphs.at(best_mask), best_energy, SearchMethod::exhaustive, graphs.count(),
                     std::nullopt);
}

SearchResult exhaustive_max_energy(std::size_t n) {
  check_exhaustive(n);
  const auto graphs = enumerate_graphs(n);
  const auto count = static_cast<std::int64_t>(graphs.count());
  std::uint64_t best_mask = 0;
  double best_energy = -1.0;
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::uint64_t local_mask = 0;
    double local_energy = -1.0;
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < count; ++m) {
      try {
        const auto mask = static_cast<std::uint64_t>(m);
        const double e = graph_energy_of_mask(n, mask);
        if (e > local_energy) {
          local_energy = e;
          local_mask = mask;
        }
      } catch (...) {
#pragma omp critical(genergy_exhaustive_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    // Same winner as the serial scan: strictly larger energy, else lower mask.
#pragma omp critical(genergy_exhaustive_merge)
    if (local_energy > best_energy || (local_energy == best_energy && local_mask < best_mask)) {
      best_energy = local_energy;
      best_mask = local_mask;
    }
  }
  if (failure) std::rethrow_exception(failure);
  return make_result(n, graphs.at(best_mask), best_energy, SearchMethod::exhaustive, graphs.count(),
                     std::nullopt);
}

SearchResult local_search_max_energy(std::size_t n, std::uint64_t seed, std::uint64_t iterations) {
  return local_search<true>(n, seed, iterations);
}

SearchResult local_search_max_energy_serial(std::size_t n, std::uint64_t seed,
                                            std::uint64_t iterations) {
  return local_search<false>(n, seed, iterations);
}

}  // namespace genergy
