#include "omcanon/os_algebra.hpp"

#include <algorithm>
#include <map>

namespace omc {

namespace {

void check_same_grade(const OSElement& a, const OSElement& b) {
  if (a.grade != b.grade || a.coords.size() != b.coords.size()) throw Error("OS elements of different grades");
}

}  // namespace

OSElement operator+(const OSElement& a, const OSElement& b) {
  check_same_grade(a, b);
  OSElement c = a;
  for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
  return c;
}

OSElement operator-(const OSElement& a, const OSElement& b) {
  check_same_grade(a, b);
  OSElement c = a;
  for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] -= b.coords[i];
  return c;
}

OSElement operator-(const OSElement& a) {
  OSElement c = a;
  for (auto& v : c.coords) v = -v;
  return c;
}

OSElement operator*(const Rational& s, const OSElement& a) {
  OSElement c = a;
  for (auto& v : c.coords) v *= s;
  return c;
}

OSAlgebra::OSAlgebra(const Matroid& m) : matroid_(m), nbc_(m) {
  const int r = m.rank();
  const int na = nbc_.num_atoms();
  for (int a = 0; a < na; ++a) atom_ids_.push_back(m.ids()[static_cast<std::size_t>(nbc_.representative(a))]);
  for (int k = 0; k <= r; ++k) {
    const auto& sets = nbc_.sets(k);
    for (std::size_t i = 0; i < sets.size(); ++i) index_[sets[i]] = static_cast<int>(i);
  }

  const auto& circuits = nbc_.circuits();
  const auto& broken = nbc_.broken_circuits();
  table_.resize(static_cast<std::size_t>(r + 1));
  for (int k = 0; k <= r; ++k) {
    auto& tab = table_[static_cast<std::size_t>(k)];
    for_each_subset(na, k, [&](Mask s) {
      if (!nbc_.is_independent(s)) return;
      if (const auto it = index_.find(s); it != index_.end()) {
        tab[s] = {{it->second, Rational(1)}};
        return;
      }
      std::size_t which = 0;
      while ((broken[which] & ~s) != 0) ++which;
      const Mask bc = broken[which];
      const Mask c = circuits[which];
      const Mask rest = s & ~bc;
      const int sign0 = merge_sign(bc, rest);
      // e_{C - c0} = sum_{j >= 1} (-1)^{j+1} e_{C - c_j}; each new set is S - c_j + c0 < S
      std::map<int, Rational> acc;
      const auto cs = bits_of(c);
      for (std::size_t j = 1; j < cs.size(); ++j) {
        const Mask cj = c & ~bit(cs[j]);
        const Mask t = cj | rest;
        if (!nbc_.is_independent(t)) continue;
        const int sign = sign0 * ((j & 1) ? 1 : -1) * merge_sign(cj, rest);
        for (const auto& [idx, v] : tab.at(t)) acc[idx] += sign * v;
      }
      Sparse out;
      for (auto& [idx, v] : acc)
        if (sgn(v) != 0) out.emplace_back(idx, v);
      tab[s] = std::move(out);
    });
  }

  boundary_.resize(static_cast<std::size_t>(r + 1));
  for (int k = 1; k <= r; ++k) {
    Matrix d(dim(k - 1), dim(k));
    const auto& sets = nbc_.sets(k);
    for (int col = 0; col < dim(k); ++col) {
      const auto elems = bits_of(sets[static_cast<std::size_t>(col)]);
      for (int j = 1; j <= k; ++j) {
        const Mask face = sets[static_cast<std::size_t>(col)] & ~bit(elems[static_cast<std::size_t>(j - 1)]);
        d(index_.at(face), col) += ((k - j) & 1) ? -1 : 1;
      }
    }
    boundary_[static_cast<std::size_t>(k)] = std::move(d);
  }
  if (r >= 1 && omc::rank(boundary_[static_cast<std::size_t>(r)]) != dim(r))
    throw InvariantViolation("boundary is not injective in top degree");

  reduced_.resize(static_cast<std::size_t>(r + 1));
  for (int k = 0; k < r; ++k) {
    const Matrix& d = boundary_[static_cast<std::size_t>(k + 1)];
    for (int col : independent_columns(d)) reduced_[static_cast<std::size_t>(k)].push_back({k, d.column(col)});
  }
}

int OSAlgebra::reduced_dim(int k) const { return static_cast<int>(reduced_basis(k).size()); }

OSElement OSAlgebra::one() const {
  OSElement x = zero(0);
  x.coords[0] = 1;
  return x;
}

const OSAlgebra::Sparse& OSAlgebra::straightened(Mask atoms) const {
  return table_[static_cast<std::size_t>(popcount(atoms))].at(atoms);
}

OSElement OSAlgebra::atoms_monomial(Mask atoms) const {
  const int k = popcount(atoms);
  OSElement x = zero(k);
  if (k > rank() || !nbc_.is_independent(atoms)) return x;
  for (const auto& [idx, v] : straightened(atoms)) x.coords[static_cast<std::size_t>(idx)] = v;
  return x;
}

OSElement OSAlgebra::monomial(const std::vector<int>& positions) const {
  std::vector<int> atoms;
  for (int p : positions) {
    if (p < 0 || p >= matroid_.size()) throw Error("unknown element position " + std::to_string(p));
    atoms.push_back(matroid_.atom_of(p));
  }
  const int k = static_cast<int>(atoms.size());
  const int s = sort_sign(atoms);
  if (s == 0) return zero(k);
  OSElement x = atoms_monomial(mask_of(atoms));
  return s < 0 ? -x : x;
}

OSElement OSAlgebra::monomial_ids(const std::vector<int>& ids) const {
  std::vector<int> positions;
  for (int id : ids) {
    const int p = matroid_.position_of(id);
    if (p < 0) throw Error("unknown element id " + std::to_string(id));
    positions.push_back(p);
  }
  return monomial(positions);
}

OSElement OSAlgebra::wedge(const OSElement& x, const OSElement& y) const {
  OSElement z = zero(x.grade + y.grade);
  if (z.coords.empty()) return z;
  const auto& sx = nbc_.sets(x.grade);
  const auto& sy = nbc_.sets(y.grade);
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (sgn(x.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < sy.size(); ++j) {
      if (sgn(y.coords[j]) == 0 || (sx[i] & sy[j])) continue;
      const Mask u = sx[i] | sy[j];
      if (!nbc_.is_independent(u)) continue;
      const Rational c = merge_sign(sx[i], sy[j]) * x.coords[i] * y.coords[j];
      for (const auto& [idx, v] : straightened(u)) z.coords[static_cast<std::size_t>(idx)] += c * v;
    }
  }
  return z;
}

OSElement OSAlgebra::boundary(const OSElement& x) const {
  if (x.grade < 1) throw Error("boundary of a degree-0 element");
  if (x.grade > rank()) return zero(x.grade - 1);
  return {x.grade - 1, boundary_matrix(x.grade) * x.coords};
}

const Matrix& OSAlgebra::boundary_matrix(int k) const {
  if (k < 1 || k > rank()) throw Error("boundary matrix out of range");
  return boundary_[static_cast<std::size_t>(k)];
}

const std::vector<OSElement>& OSAlgebra::reduced_basis(int k) const {
  static const std::vector<OSElement> empty;
  if (k < 0 || k >= rank()) return empty;
  return reduced_[static_cast<std::size_t>(k)];
}

OSElement OSAlgebra::residue(const OSElement& x, int atom, const OSAlgebra& target) const {
  if (x.grade < 1) throw Error("residue of a degree-0 element");
  if (atom < 0 || atom >= nbc_.num_atoms()) throw Error("residue at an unknown atom");
  OSElement out = target.zero(x.grade - 1);
  const auto& sets = nbc_.sets(x.grade);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sgn(x.coords[i]) == 0 || !contains(sets[i], atom)) continue;
    const int after = popcount(sets[i] & ~low_bits(atom + 1));
    std::vector<int> ids;
    for (int b : bits_of(sets[i] & ~bit(atom))) ids.push_back(atom_ids_[static_cast<std::size_t>(b)]);
    const OSElement term = target.monomial_ids(ids);
    const Rational c = (after & 1) ? Rational(-x.coords[i]) : x.coords[i];
    for (std::size_t j = 0; j < out.coords.size(); ++j)
      if (sgn(term.coords[j]) != 0) out.coords[j] += c * term.coords[j];
  }
  return out;
}

Matrix OSAlgebra::residue_matrix(int k, int atom, const OSAlgebra& target) const {
  std::vector<Vector> cols;
  for (int i = 0; i < dim(k); ++i) {
    OSElement e = zero(k);
    e.coords[static_cast<std::size_t>(i)] = 1;
    cols.push_back(residue(e, atom, target).coords);
  }
  return Matrix::from_columns(cols, target.dim(k - 1));
}

Matrix OSAlgebra::inclusion_matrix(int k, const OSAlgebra& source) const {
  std::vector<Vector> cols;
  for (Mask s : source.nbc().sets(k)) {
    std::vector<int> ids;
    for (int b : bits_of(s)) ids.push_back(source.atom_ids_[static_cast<std::size_t>(b)]);
    cols.push_back(monomial_ids(ids).coords);
  }
  return Matrix::from_columns(cols, dim(k));
}

OSElement OSAlgebra::include(const OSElement& x, const OSAlgebra& source) const {
  return {x.grade, inclusion_matrix(x.grade, source) * x.coords};
}

OSElement OSAlgebra::inverse_boundary(const OSElement& y) const {
  const int r = rank();
  if (r < 1 || y.grade != r - 1) throw Error("inverse boundary expects a top-degree reduced element");
  const auto x = solve(boundary_matrix(r), y.coords);
  if (!x) throw InvariantViolation("element is not in the image of the boundary");
  return {r, *x};
}

std::vector<std::pair<Mask, Rational>> OSAlgebra::terms(const OSElement& x) const {
  std::vector<std::pair<Mask, Rational>> out;
  const auto& sets = nbc_.sets(x.grade);
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sgn(x.coords[i]) != 0) out.emplace_back(sets[i], x.coords[i]);
  return out;
}

OSElement OSAlgebra::from_terms(int k, const std::vector<std::pair<Mask, Rational>>& terms) const {
  OSElement x = zero(k);
  for (const auto& [s, v] : terms) {
    if (popcount(s) != k) throw Error("term of the wrong degree");
    x.coords[static_cast<std::size_t>(index_of(s))] += v;
  }
  return x;
}

int OSAlgebra::index_of(Mask atoms) const {
  const auto it = index_.find(atoms);
  if (it == index_.end()) throw Error("not an NBC set");
  return it->second;
}

std::optional<Vector> coordinates(const OSElement& x, const std::vector<OSElement>& basis) {
  return solve(columns_of(basis, static_cast<int>(x.coords.size())), x.coords);
}

Matrix columns_of(const std::vector<OSElement>& elems, int dim) {
  std::vector<Vector> cols;
  for (const auto& e : elems) cols.push_back(e.coords);
  return Matrix::from_columns(cols, dim);
}

}  // namespace omc
