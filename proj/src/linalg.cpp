#include "omcanon/linalg.hpp"

#include <algorithm>

namespace omc {

Matrix Matrix::from_columns(const std::vector<Vector>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    const Vector& c = cols[static_cast<std::size_t>(j)];
    if (static_cast<int>(c.size()) != rows) throw Error("column of wrong length");
    for (int i = 0; i < rows; ++i) m(i, j) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

Vector Matrix::column(int j) const {
  Vector v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Vector Matrix::row(int i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::hstack(const Matrix& other) const {
  if (other.rows_ != rows_) throw Error("hstack: row mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (other.cols_ != cols_) throw Error("vstack: column mismatch");
  Matrix m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<long>(data_.size()));
  return m;
}

Vector Matrix::operator*(const Vector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw Error("matrix-vector size mismatch");
  Vector y(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
  return y;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error("matrix size mismatch");
  Matrix c(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += (*this)(i, k) * b(k, j);
    }
  return c;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Echelon rref(Matrix a) {
  Echelon out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = 1 / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivots.size()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(static_cast<std::size_t>(a.cols()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[static_cast<std::size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), a.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> out;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> independent_columns(const Matrix& a) { return rref(a).pivots; }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool is_integral(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

}  // namespace omc
