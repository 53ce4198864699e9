#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

/// G(n, 1/2): potential edges in canonical row-major order over i < j, each
/// decided by one bit of a splitmix64 stream seeded with `seed`, most
/// significant bit of every 64-bit output first. Bit set means edge present.
Graph sample_gnp_half(std::size_t n, std::uint64_t seed);

struct TrialResult {
  double energy;
  double sigma1;
  double sigma2;
};

struct EnsembleStats {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_energy_ratio = 0.0;  // mean of E / n^{3/2}
  double mean_sigma1_ratio = 0.0;  // mean of sigma1 / n
  double max_sigma2_ratio = 0.0;   // max of sigma2 / sqrt(n)
  std::vector<TrialResult> per_trial;
};

/// Spectrum summary of one G(n, 1/2) sample.
TrialResult run_trial(std::size_t n, std::uint64_t trial_seed);

/// Aggregates per-trial results, folding in trial order.
EnsembleStats summarize(std::size_t n, std::uint64_t seed, std::vector<TrialResult> per_trial);

/// Monte Carlo over `trials` samples of G(n, 1/2); trial t uses
/// derive_seed(seed, t). Trials run in parallel under OpenMP, and the result
/// is bit-identical to montecarlo_serial.
EnsembleStats montecarlo(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Single-threaded reference for montecarlo.
EnsembleStats montecarlo_serial(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Integrand |x| sqrt(1 - x^2) of the energy constant (zero outside [-1, 1]).
double semicircle_energy_integrand(double x);

inline constexpr std::size_t default_semicircle_panels = 1'000'000;

/// (2/pi) * integral_{-1}^{1} |x| sqrt(1-x^2) dx by composite Simpson on [0,1],
/// doubled. Converges to 4/(3 pi).
double semicircle_energy_constant(std::size_t panels = default_semicircle_panels);

/// Semicircle density (2/pi) sqrt(1 - x^2) on [-1, 1], zero outside.
double semicircle_density(double x);

/// Mass of the semicircle law on [lo, hi] by Simpson quadrature.
double semicircle_mass(double lo, double hi);

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<double> masses;
  std::vector<double> reference_masses;  // semicircle mass per bin
  std::size_t sample_count = 0;
};

inline constexpr double histogram_half_width = 1.25;

/// Adjacency eigenvalues scaled by 1/sqrt(n), binned uniformly over
/// [-1.25, 1.25]. Bins are [lo, hi) except the last, which is closed; values
/// outside the window saturate into the end bins.
Histogram spectral_histogram(const Graph& g, std::size_t bins);

/// sum |mass - reference_mass| over bins.
double l1_distance_to_semicircle(const Histogram& h);

/// CSV with header bin_lo,bin_hi,mass,reference_mass.
std::string histogram_csv(const Histogram& h);

}  // namespace genergy
