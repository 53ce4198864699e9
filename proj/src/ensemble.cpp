#include "genergy/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <exception>
#include <numbers>

#include "genergy/error.hpp"
#include "genergy/quadrature.hpp"
#include "genergy/random.hpp"
#include "genergy/spectrum.hpp"

namespace genergy {

Graph sample_gnp_half(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(pair_count(n) / 2 + 1);
  std::uint64_t word = 0;
  int bits_left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bits_left == 0) {
        word = rng.next();
        bits_left = 64;
      }
      --bits_left;
      if ((word >> bits_left) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

TrialResult run_trial(std::size_t n, std::uint64_t trial_seed) {
  const auto spectrum = singular_values_symmetric(adjacency(sample_gnp_half(n, trial_seed)));
  return {spectrum.sum(), spectrum.sigma(0), spectrum.sigma(1)};
}

EnsembleStats summarize(std::size_t n, std::uint64_t seed, std::vector<TrialResult> per_trial) {
  EnsembleStats s;
  s.n = n;
  s.trials = per_trial.size();
  s.seed = seed;
  const double nd = static_cast<double>(n);
  const double n32 = nd * std::sqrt(nd);
  const double sqrt_n = std::sqrt(nd);
  double e_sum = 0.0, s1_sum = 0.0;
  for (const auto& t : per_trial) {
    e_sum += t.energy / n32;
    s1_sum += t.sigma1 / nd;
    s.max_sigma2_ratio = std::max(s.max_sigma2_ratio, t.sigma2 / sqrt_n);
  }
  const double count = static_cast<double>(per_trial.size());
  s.mean_energy_ratio = e_sum / count;
  s.mean_sigma1_ratio = s1_sum / count;
  s.per_trial = std::move(per_trial);
  return s;
}

namespace {

void check_montecarlo_args(std::size_t n, std::size_t trials) {
  if (n < 2) throw GuardError("montecarlo needs n >= 2");
  if (trials < 1) throw GuardError("montecarlo needs trials >= 1");
}

}  // namespace

EnsembleStats montecarlo_serial(std::size_t n, std::size_t trials, std::uint64_t seed) {
  check_montecarlo_args(n, trials);
  std::vector<TrialResult> results;
  results.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) results.push_back(run_trial(n, derive_seed(seed, t)));
  return summarize(n, seed, std::move(results));
}

EnsembleStats montecarlo(std::size_t n, std::size_t trials, std::uint64_t seed) {
  check_montecarlo_args(n, trials);
  std::vector<TrialResult> results(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
  // Exceptions must not escape an OpenMP region; stash the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      results[t] = run_trial(n, derive_seed(seed, static_cast<std::uint64_t>(t)));
    } catch (...) {
#pragma omp critical(genergy_montecarlo_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(n, seed, std::move(results));
}

double semicircle_energy_integrand(double x) {
  const double r = 1.0 - x * x;
  return r > 0.0 ? std::abs(x) * std::sqrt(r) : 0.0;
}

double semicircle_energy_constant(std::size_t panels) {
  const double half = simpson(semicircle_energy_integrand, 0.0, 1.0, panels);
  return 2.0 / std::numbers::pi * (2.0 * half);
}

double semicircle_density(double x) {
  const double r = 1.0 - x * x;
  return r > 0.0 ? 2.0 / std::numbers::pi * std::sqrt(r) : 0.0;
}

double semicircle_mass(double lo, double hi) {
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);
  if (hi <= lo) return 0.0;
  return simpson(semicircle_density, lo, hi, std::size_t{1} << 16);
}

Histogram spectral_histogram(const Graph& g, std::size_t bins) {
  if (bins < 2) throw GuardError("histogram needs at least 2 bins");
  const double lo = -histogram_half_width;
  const double width = 2.0 * histogram_half_width / static_cast<double>(bins);

  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) h.bin_edges[k] = lo + static_cast<double>(k) * width;
  h.bin_edges.back() = histogram_half_width;

  const auto eigenvalues = jacobi_eigenvalues(adjacency(g));
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  std::vector<std::size_t> counts(bins, 0);
  for (double mu : eigenvalues) {
    const double x = mu * scale;
    const double pos = std::floor((x - lo) / width);
    const auto k = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    ++counts[k];
  }
  h.sample_count = eigenvalues.size();
  h.masses.resize(bins);
  h.reference_masses.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    h.masses[k] = static_cast<double>(counts[k]) / static_cast<double>(h.sample_count);
    h.reference_masses[k] = semicircle_mass(h.bin_edges[k], h.bin_edges[k + 1]);
  }
  return h;
}

double l1_distance_to_semicircle(const Histogram& h) {
  double d = 0.0;
  for (std::size_t k = 0; k < h.masses.size(); ++k) d += std::abs(h.masses[k] - h.reference_masses[k]);
  return d;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,mass,reference_mass\n";
  auto put = [&out](double v, char sep) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
    out.push_back(sep);
  };
  for (std::size_t k = 0; k < h.masses.size(); ++k) {
    put(h.bin_edges[k], ',');
    put(h.bin_edges[k + 1], ',');
    put(h.masses[k], ',');
    put(h.reference_masses[k], '\n');
  }
  return out;
}

}  // namespace genergy
