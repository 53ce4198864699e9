#include "genergy/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

#include "genergy/error.hpp"

namespace genergy {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k])) {
      throw NonFiniteError("non-finite entry at (" + std::to_string(k / cols_) + ", " +
                           std::to_string(k % cols_) + ")");
    }
  }
}

DenseMatrix DenseMatrix::zeros(std::size_t rows, std::size_t cols) {
  return constant(rows, cols, 0.0);
}

DenseMatrix DenseMatrix::constant(std::size_t rows, std::size_t cols, double value) {
  return DenseMatrix(rows, cols, std::vector<double>(rows * cols, value));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return DenseMatrix(n, n, std::move(e));
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  const std::size_t n = diag.size();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return DenseMatrix(n, n, std::move(e));
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<double> e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(e));
}

DenseMatrix DenseMatrix::transposed() const {
  std::vector<double> t(entries_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t[j * rows_ + i] = entries_[i * cols_ + j];
  return DenseMatrix(cols_, rows_, std::move(t));
}

DenseMatrix DenseMatrix::scaled(double c) const {
  std::vector<double> s(entries_);
  for (double& x : s) x *= c;
  return DenseMatrix(rows_, cols_, std::move(s));
}

double entry_sum(const DenseMatrix& a) {
  const auto e = a.entries();
  return std::accumulate(e.begin(), e.end(), 0.0);
}

double max_entry(const DenseMatrix& a) {
  const auto e = a.entries();
  return *std::max_element(e.begin(), e.end());
}

double gram_trace(const DenseMatrix& a) {
  double t = 0.0;
  for (double x : a.entries()) t += x * x;
  return t;
}

double frobenius_norm(const DenseMatrix& a) { return std::sqrt(gram_trace(a)); }

bool is_nonnegative(const DenseMatrix& a) {
  const auto e = a.entries();
  return std::all_of(e.begin(), e.end(), [](double x) { return x >= 0.0; });
}

bool is_exactly_symmetric(const DenseMatrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_adjacency_like(const DenseMatrix& a) {
  if (!is_exactly_symmetric(a)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0.0) return false;
    for (double x : a.row(i))
      if (x != 0.0 && x != 1.0) return false;
  }
  return true;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<double> c(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const double ail = a(i, l);
      const auto brow = b.row(l);
      double* crow = c.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
    }
  return DenseMatrix(m, n, std::move(c));
}

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

template <typename T>
bool parse_token(const std::string& tok, T& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::vector<double> entries;
  std::size_t rows_read = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2 || !parse_token(tokens[0], rows) || !parse_token(tokens[1], cols) ||
          rows == 0 || cols == 0) {
        throw ParseError(ParseErrorKind::bad_header, line_no,
                         "expected header 'm n' with positive integers, got '" + line + "'");
      }
      have_header = true;
      entries.reserve(rows * cols);
      continue;
    }
    if (rows_read == rows) {
      throw ParseError(ParseErrorKind::wrong_entry_count, line_no,
                       "more than " + std::to_string(rows) + " rows");
    }
    if (tokens.size() != cols) {
      throw ParseError(ParseErrorKind::wrong_entry_count, line_no,
                       "expected " + std::to_string(cols) + " values, got " +
                           std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      double v = 0.0;
      if (!parse_token(tok, v) || !std::isfinite(v)) {
        throw ParseError(ParseErrorKind::malformed, line_no, "bad number '" + tok + "'");
      }
      entries.push_back(v);
    }
    ++rows_read;
  }
  if (!have_header) throw ParseError(ParseErrorKind::bad_header, 0, "empty matrix input");
  if (rows_read != rows) {
    throw ParseError(ParseErrorKind::wrong_entry_count, 0,
                     "expected " + std::to_string(rows) + " rows, got " + std::to_string(rows_read));
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

DenseMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  char buf[32];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
      if (j) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

std::string serialize_matrix(const DenseMatrix& a) {
  std::ostringstream out;
  write_matrix(out, a);
  return out.str();
}

}  // namespace genergy
