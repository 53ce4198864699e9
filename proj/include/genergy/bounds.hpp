#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genergy/matrix.hpp"
#include "genergy/spectrum.hpp"

namespace genergy {

class Graph;

/// The energy inequalities the toolkit evaluates.
enum class BoundName {
  km_first,         // 2e/n + sqrt((n-1)(2e - (2e/n)^2)), graphs with e >= n/2
  km_absolute,      // (n/2)(1 + sqrt(n))
  thm1_upper,       // ||A||_1/sqrt(mn) + sqrt((m-1)(tr - ||A||_1^2/(mn)))
  thm2_absolute,    // alpha (m + sqrt(m)) sqrt(n) / 2
  weak_upper,       // sqrt(min(m,n) tr)
  lowb_lower,       // sigma1 + (tr - sigma1^2)/sigma2
  sigma1_rayleigh,  // ||A||_1/sqrt(mn) <= sigma1 <= energy
};

enum class BoundSide { upper, lower };

std::string_view to_string(BoundName name);
BoundSide side_of(BoundName name);

/// One precondition check: label, outcome, and the measured quantities it
/// was decided on.
struct Diagnostic {
  std::string label;
  bool held = false;
  std::vector<std::pair<std::string, double>> measured;
};

/// Value of one bound on a concrete input. `value` is engaged exactly when
/// `applicable` is true; when not applicable at least one diagnostic failed.
struct BoundReport {
  BoundName name;
  bool applicable = false;
  std::optional<double> value;
  std::vector<Diagnostic> diagnostics;
};

struct Violation {
  BoundName name;
  double bound;
  double energy;
  double excess;
};

struct CertificationReport {
  double energy = 0.0;
  std::vector<BoundReport> reports;
  std::vector<Violation> violations;
  double tolerance = 0.0;

  bool ok() const noexcept { return violations.empty(); }
  const BoundReport* find(BoundName name) const;
};

/// Relative threshold below which sigma2 counts as zero for the lower bound.
inline constexpr double sigma2_relative_floor = 1e-9;
/// Radicand slack (relative to max(1, tr)) absorbed as roundoff in thm1_upper.
inline constexpr double radicand_slack = 1e-12;
inline constexpr double default_certify_tolerance = 1e-7;

/// Sum of singular values. Exactly symmetric inputs use the eigenvalue-moduli
/// route, everything else the Gram route.
double energy(const DenseMatrix& a);

/// Sum of absolute adjacency eigenvalues.
double graph_energy(const Graph& g);

BoundReport sigma1_rayleigh_lower(const DenseMatrix& a);

struct KmBounds {
  BoundReport first;
  BoundReport absolute;
};

/// Koolen-Moulton bounds stated on order and edge count.
KmBounds km_upper(std::uint64_t n_vertices, std::uint64_t n_edges);

BoundReport thm1_upper(const DenseMatrix& a);
BoundReport thm2_upper(const DenseMatrix& a);
BoundReport weak_upper(const DenseMatrix& a);

BoundReport lowb_lower(const DenseMatrix& a);
/// Lower bound from an already computed spectrum and Gram trace.
BoundReport lowb_lower(const SingularSpectrum& spectrum, double trace);

/// Evaluates every bound and lists those that the energy contradicts by more
/// than `tolerance`. KM bounds apply only to 0/1 symmetric hollow inputs.
CertificationReport certify(const DenseMatrix& a, double tolerance = default_certify_tolerance);

}  // namespace genergy
