#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace genergy {

/// Dense real m x n matrix, row-major. Entries are validated finite at
/// construction and the object is immutable afterwards.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix zeros(std::size_t rows, std::size_t cols);
  static DenseMatrix constant(std::size_t rows, std::size_t cols, double value);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> diag);
  /// Row-by-row initializer, e.g. `from_rows({{1, 2}, {3, 4}})`.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  DenseMatrix transposed() const;
  DenseMatrix scaled(double c) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// Sum of all entries. For a nonnegative matrix this is the entrywise 1-norm.
double entry_sum(const DenseMatrix& a);

/// Largest entry (alpha for a nonnegative matrix).
double max_entry(const DenseMatrix& a);

/// tr(A A^T) = sum of squared entries, straight from the entries.
double gram_trace(const DenseMatrix& a);

double frobenius_norm(const DenseMatrix& a);

bool is_nonnegative(const DenseMatrix& a);

/// Exact symmetry (bitwise equal mirror entries). Adjacency matrices and
/// anything produced by symmetric construction pass.
bool is_exactly_symmetric(const DenseMatrix& a);

/// Square, symmetric, zero diagonal, every entry 0 or 1.
bool is_adjacency_like(const DenseMatrix& a);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// Text format:
//   m n
//   a11 a12 ... a1n
//   ...
// Lines starting with '#' are comments; blank lines are skipped.
DenseMatrix parse_matrix(const std::string& text);
DenseMatrix read_matrix(std::istream& in);
std::string serialize_matrix(const DenseMatrix& a);
void write_matrix(std::ostream& out, const DenseMatrix& a);

}  // namespace genergy
