#include "spp/matrix.hpp"

#include "spp/errors.hpp"

#include <string>
#include <utility>

namespace spp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return a.entries_[i] < b.entries_[i];
  }
  return false;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> x) {
  if (m.cols() != x.size()) throw DimensionError("matrix-vector product: size mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Forward elimination to row echelon form; returns the pivot columns
// (restricted to the first `pivot_cols` columns) and the number of row swaps.
std::pair<std::vector<std::size_t>, std::size_t> echelon(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t swaps = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      swap_rows(m, sel, row);
      ++swaps;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(row, col);
      m(r, col) = 0;
      for (std::size_t c = col + 1; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(pivots), swaps};
}

}  // namespace

Rational determinant(Matrix m) {
  if (!m.is_square())
    throw DimensionError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  auto [pivots, swaps] = echelon(m, m.cols());
  if (pivots.size() < m.rows()) return 0;
  Rational det = (swaps % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

std::size_t rank(Matrix m) { return echelon(m, m.cols()).first.size(); }

LinearSolution solve_linear(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows())
    throw DimensionError("solve_linear: right-hand side has " + std::to_string(b.size()) +
                         " entries, matrix has " + std::to_string(m.rows()) + " rows");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto [pivots, swaps] = echelon(aug, n);
  if (pivots.size() < n) return {LinearSolution::Status::singular, {}};
  for (std::size_t r = n; r < aug.rows(); ++r)
    if (aug(r, n) != 0) return {LinearSolution::Status::inconsistent, {}};
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug(i, n);
    for (std::size_t c = i + 1; c < n; ++c) acc -= aug(i, c) * x[c];
    x[i] = acc / aug(i, i);
  }
  return {LinearSolution::Status::unique, std::move(x)};
}

std::vector<Rational> solve_vandermonde(std::span<const Rational> node_values) {
  const std::size_t size = node_values.size();
  Matrix v(size, size);
  for (std::size_t node = 0; node < size; ++node) {
    Rational p = 1;
    for (std::size_t j = 0; j < size; ++j) {
      v(node, j) = p;
      p *= node;
    }
  }
  LinearSolution sol = solve_linear(v, node_values);
  if (!sol.has_solution()) throw InternalError("Vandermonde system at distinct nodes reported singular");
  return std::move(sol.x);
}

}  // namespace spp
