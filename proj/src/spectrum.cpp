#include "genergy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "genergy/error.hpp"

namespace genergy {

double SingularSpectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double SingularSpectrum::sum_of_squares() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * off);
}

std::vector<double> symmetrized(const DenseMatrix& s) {
  if (!s.square()) {
    throw DimensionError("eigendecomposition needs a square matrix, got " +
                         std::to_string(s.rows()) + "x" + std::to_string(s.cols()));
  }
  const std::size_t n = s.rows();
  const double limit = jacobi::symmetry_tolerance * frobenius_norm(s);
  std::vector<double> a(s.entries().begin(), s.entries().end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = a[i * n + j], y = a[j * n + i];
      if (std::abs(x - y) > limit) {
        throw SymmetryError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      }
      a[i * n + j] = a[j * n + i] = 0.5 * (x + y);
    }
  return a;
}

// Runs cyclic Jacobi in place on the symmetric row-major `a`. When `vt` is
// non-null it accumulates the transposed rotation product: row i of *vt is the
// eigenvector belonging to a[i][i] on return.
void cyclic_jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* vt,
                   double input_norm) {
  const double target = jacobi::relative_tolerance * input_norm;
  double off = off_diagonal_norm(a, n);
  for (int sweep = 0; off > target; ++sweep) {
    if (sweep == jacobi::max_sweeps) {
      throw ConvergenceError("cyclic Jacobi did not converge in " +
                                 std::to_string(jacobi::max_sweeps) +
                                 " sweeps; off-diagonal norm " + std::to_string(off),
                             off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* rp = a.data() + p * n;
        double* rq = a.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const double xp = rp[k], xq = rq[k];
          rp[k] = c * xp - s * xq;
          rq[k] = s * xp + c * xq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          a[k * n + p] = rp[k];
          a[k * n + q] = rq[k];
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = rq[p] = 0.0;

        if (vt) {
          double* vp = vt->data() + p * n;
          double* vq = vt->data() + q * n;
          for (std::size_t k = 0; k < n; ++k) {
            const double xp = vp[k], xq = vq[k];
            vp[k] = c * xp - s * xq;
            vq[k] = s * xp + c * xq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }
}

// Stable descending order of the diagonal of `a`.
std::vector<std::size_t> descending_order(const std::vector<double>& a, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] > a[y * n + y];
  });
  return order;
}

}  // namespace

SymmetricEigen jacobi_eigh(const DenseMatrix& s) {
  auto a = symmetrized(s);
  const std::size_t n = s.rows();
  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;
  cyclic_jacobi(a, n, &vt, frobenius_norm(s));

  const auto order = descending_order(a, n);
  std::vector<double> values(n);
  std::vector<double> basis(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    values[col] = a[src * n + src];
    for (std::size_t k = 0; k < n; ++k) basis[k * n + col] = vt[src * n + k];
  }
  return {std::move(values), DenseMatrix(n, n, std::move(basis))};
}

std::vector<double> jacobi_eigenvalues(const DenseMatrix& s) {
  auto a = symmetrized(s);
  const std::size_t n = s.rows();
  cyclic_jacobi(a, n, nullptr, frobenius_norm(s));
  const auto order = descending_order(a, n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[order[i] * n + order[i]];
  return values;
}

SingularSpectrum singular_values(const DenseMatrix& a) {
  const bool rows_side = a.rows() <= a.cols();
  const DenseMatrix gram = rows_side ? multiply(a, a.transposed()) : multiply(a.transposed(), a);
  auto lambda = jacobi_eigenvalues(gram);
  for (double& x : lambda) x = std::sqrt(std::max(x, 0.0));
  return {std::move(lambda)};
}

SingularSpectrum singular_values_symmetric(const DenseMatrix& s) {
  auto mu = jacobi_eigenvalues(s);
  for (double& x : mu) x = std::abs(x);
  std::stable_sort(mu.begin(), mu.end(), std::greater<>());
  return {std::move(mu)};
}

SingularSpectrum spectrum_of(const DenseMatrix& a) {
  return is_exactly_symmetric(a) ? singular_values_symmetric(a) : singular_values(a);
}

}  // namespace genergy
