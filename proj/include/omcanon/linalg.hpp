#pragma once

#include "omcanon/core.hpp"

#include <optional>
#include <vector>

namespace omc {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix from_columns(const std::vector<Vector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Vector column(int j) const;
  Vector row(int i) const;
  Matrix transposed() const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  /// [this ; other]
  Matrix vstack(const Matrix& other) const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& b) const;
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row, increasing
};

/// Gauss-Jordan elimination; the pivot in each column is the first usable row.
Echelon rref(Matrix a);

int rank(const Matrix& a);

/// Some x with a x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a);

/// Leftmost maximal set of linearly independent columns.
std::vector<int> independent_columns(const Matrix& a);

bool is_zero(const Vector& v);
bool is_integral(const Vector& v);

}  // namespace omc
