#pragma once

#include "spp/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spp {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  // Builds a matrix whose j-th column is columns[j]; every column needs
  // `rows` entries.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  // Row-major entries.
  std::span<const Rational> entries() const { return entries_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  // Shape first, then row-major lexicographic on entries.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& m, std::span<const Rational> x);

// Throws DimensionError on non-square input.
Rational determinant(Matrix m);

std::size_t rank(Matrix m);

struct LinearSolution {
  enum class Status { unique, singular, inconsistent };
  Status status = Status::singular;
  std::vector<Rational> x;

  bool has_solution() const { return status == Status::unique; }
};

// Solves m x = b for a matrix with at least as many rows as columns.
// Rank-deficient coefficient matrices report `singular` (this takes
// precedence, so square singular systems are never `inconsistent`); a
// full-column-rank overdetermined system with no solution reports
// `inconsistent`. Throws DimensionError when b.size() != m.rows().
LinearSolution solve_linear(const Matrix& m, std::span<const Rational> b);

// Coefficients c_0..c_d of the unique polynomial of degree <= d taking
// node_values[e] at e = 0, 1, ..., d.
std::vector<Rational> solve_vandermonde(std::span<const Rational> node_values);

}  // namespace spp
