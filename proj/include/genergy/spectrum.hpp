#pragma once

#include <vector>

#include "genergy/matrix.hpp"

namespace genergy {

/// Eigenpairs of a real symmetric matrix, eigenvalues nonincreasing.
/// Column i of `basis` is the unit eigenvector for `eigenvalues[i]`.
struct SymmetricEigen {
  std::vector<double> eigenvalues;
  DenseMatrix basis;
};

/// min(m, n) singular values, nonincreasing.
struct SingularSpectrum {
  std::vector<double> values;

  double sigma(std::size_t i) const { return i < values.size() ? values[i] : 0.0; }
  double sum() const;
  double sum_of_squares() const;
};

namespace jacobi {
/// Sweep cap and stopping rule for cyclic Jacobi: stop when the
/// off-diagonal Frobenius norm is at most `relative_tolerance * ||S||_F`.
inline constexpr int max_sweeps = 60;
inline constexpr double relative_tolerance = 1e-13;
/// Per-entry asymmetry accepted (relative to ||S||_F) before symmetrizing.
inline constexpr double symmetry_tolerance = 1e-12;
}  // namespace jacobi

/// Cyclic Jacobi eigendecomposition.
/// Throws DimensionError (non-square), SymmetryError, ConvergenceError.
SymmetricEigen jacobi_eigh(const DenseMatrix& s);

/// Same iteration without accumulating the rotation basis.
std::vector<double> jacobi_eigenvalues(const DenseMatrix& s);

/// Square roots of the eigenvalues of the smaller Gram matrix
/// (A A^T when m <= n, else A^T A), negatives clamped to zero.
SingularSpectrum singular_values(const DenseMatrix& a);

/// Sorted moduli of the eigenvalues. Preferred for adjacency matrices since
/// it does not square the condition number.
SingularSpectrum singular_values_symmetric(const DenseMatrix& s);

/// singular_values_symmetric when `a` is exactly symmetric, otherwise the
/// Gram route.
SingularSpectrum spectrum_of(const DenseMatrix& a);

}  // namespace genergy
