#include "omcanon/realization.hpp"

#include <algorithm>
#include <map>

namespace omc {

namespace {

Matrix select_columns(const Matrix& m, const std::vector<int>& cols) {
  Matrix out(m.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = m(i, cols[j]);
  return out;
}

int det_sign(const Matrix& a) { return sgn(determinant(a)); }

}  // namespace

Rational determinant(Matrix a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Chirotope chirotope_from_matrix(const Matrix& m) {
  for (int j = 0; j < m.cols(); ++j)
    if (is_zero(m.column(j))) throw Error("zero column " + std::to_string(j));
  if (rank(m) != m.rows()) throw Error("matrix rank is below its number of rows");
  return Chirotope::tabulate(m.rows(), m.cols(), [&](Mask b) { return det_sign(select_columns(m, bits_of(b))); });
}

Matrix reorient_columns(const Matrix& m, const SignVector& p) {
  Matrix out = m;
  for (int j = 0; j < m.cols(); ++j)
    if (p[j] < 0)
      for (int i = 0; i < m.rows(); ++i) out(i, j) = -out(i, j);
  return out;
}

std::vector<Mask> placing_triangulation(const Matrix& m, const std::vector<int>& order) {
  if (!OrientedMatroid(chirotope_from_matrix(m)).is_acyclic()) throw Error("configuration is not acyclic");
  std::vector<int> span;                   // basis of the current linear span
  std::vector<std::vector<int>> simplices;  // each lists |span| columns
  for (int p : order) {
    if (span.empty()) {
      span.push_back(p);
      simplices.push_back({p});
      continue;
    }
    std::vector<int> trial = span;
    trial.push_back(p);
    if (rank(select_columns(m, trial)) > static_cast<int>(span.size())) {
      for (auto& s : simplices) s.push_back(p);
      span.push_back(p);
      continue;
    }
    // coordinates of the columns in the span basis
    const Matrix w = select_columns(m, span);
    std::map<int, Vector> coord;
    const auto coords_of = [&](int col) -> const Vector& {
      auto it = coord.find(col);
      if (it == coord.end()) {
        const auto x = solve(w, m.column(col));
        if (!x) throw InvariantViolation("column outside the current span");
        it = coord.emplace(col, *x).first;
      }
      return it->second;
    };
    const int d = static_cast<int>(span.size());
    const auto sign_of = [&](const std::vector<int>& facet, int extra) {
      std::vector<Vector> cols;
      for (int f : facet) cols.push_back(coords_of(f));
      cols.push_back(coords_of(extra));
      return det_sign(Matrix::from_columns(cols, d));
    };
    std::map<std::vector<int>, std::vector<int>> opposite;  // facet -> opposite vertices
    for (const auto& s : simplices) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) f.push_back(s[j]);
        std::sort(f.begin(), f.end());
        opposite[f].push_back(s[i]);
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [f, vs] : opposite) {
      if (vs.size() != 1) continue;
      const int sp = sign_of(f, p);
      if (sp != 0 && sp == -sign_of(f, vs[0])) {
        auto s = f;
        s.push_back(p);
        added.push_back(std::move(s));
      }
    }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  if (static_cast<int>(span.size()) != m.rows()) throw Error("columns do not span");
  std::vector<Mask> out;
  for (const auto& s : simplices) {
    const Mask b = mask_of(s);
    if (det_sign(select_columns(m, bits_of(b))) == 0) throw InvariantViolation("placing produced a degenerate simplex");
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SignVector chamber_of(const Matrix& m, const Vector& x) {
  if (static_cast<int>(x.size()) != m.rows()) throw Error("point of wrong dimension");
  const Vector values = m.transposed() * x;
  SignVector s;
  for (int j = 0; j < m.cols(); ++j) {
    const int v = sgn(values[static_cast<std::size_t>(j)]);
    if (v == 0) throw Error("point lies on hyperplane " + std::to_string(j));
    s.set(j, v);
  }
  return s;
}

Vector interior_point(const OrientedMatroid& om, const Matrix& m, const SignVector& p) {
  Vector x(static_cast<std::size_t>(m.rows()));
  const Matrix mt = m.transposed();
  for (const auto& y : om.cocircuits()) {
    if (!y.conforms_to(p)) continue;
    std::vector<int> zero = bits_of(om.ground() & ~y.support());
    Matrix rows(static_cast<int>(zero.size()), m.rows());
    for (std::size_t i = 0; i < zero.size(); ++i)
      for (int j = 0; j < m.rows(); ++j) rows(static_cast<int>(i), j) = m(j, zero[i]);
    const auto ns = nullspace(rows);
    if (ns.size() != 1) throw InvariantViolation("cocircuit without a unique ray");
    Vector ray = ns[0];
    const Vector vals = mt * ray;
    const int e = std::countr_zero(y.support());
    if (sgn(vals[static_cast<std::size_t>(e)]) != y[e])
      for (auto& v : ray) v = -v;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += ray[i];
  }
  return x;
}

bool in_cone(const Matrix& m, Mask basis, const Vector& x) {
  const auto c = solve(select_columns(m, bits_of(basis)), x);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& v) { return sgn(v) >= 0; });
}

}  // namespace omc
