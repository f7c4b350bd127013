#pragma once

#include "omcanon/linalg.hpp"
#include "omcanon/matroid.hpp"

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace omc {

/// Element of OS^k in the NBC basis of its algebra: coords[i] is the
/// coefficient of e_S for S = nbc.sets(k)[i].
struct OSElement {
  int grade = 0;
  Vector coords;

  bool is_zero() const { return omc::is_zero(coords); }
  bool operator==(const OSElement&) const = default;
};

OSElement operator+(const OSElement& a, const OSElement& b);
OSElement operator-(const OSElement& a, const OSElement& b);
OSElement operator-(const OSElement& a);
OSElement operator*(const Rational& c, const OSElement& a);

/// Orlik-Solomon algebra of a loopless matroid over Q, generated by atoms.
///
/// Every independent set of atoms is straightened once, in increasing mask
/// order, by rewriting through the first broken circuit it contains.
class OSAlgebra {
 public:
  explicit OSAlgebra(const Matroid& m);

  const Matroid& matroid() const { return matroid_; }
  const NbcIndex& nbc() const { return nbc_; }
  int rank() const { return matroid_.rank(); }
  int dim(int k) const { return static_cast<int>(nbc_.sets(k).size()); }
  /// dim of dOS^{k+1}, the reduced algebra in degree k.
  int reduced_dim(int k) const;

  OSElement zero(int k) const { return {k, Vector(static_cast<std::size_t>(dim(k)))}; }
  OSElement one() const;
  /// e_S for an ascending set of atoms.
  OSElement atoms_monomial(Mask atoms) const;
  /// e_(p1,...,pk) for an ordered sequence of positions.
  OSElement monomial(const std::vector<int>& positions) const;
  /// Same, with global element ids.
  OSElement monomial_ids(const std::vector<int>& ids) const;

  OSElement wedge(const OSElement& x, const OSElement& y) const;
  /// d e_S = sum_i (-1)^i e_{S minus s_{k-i}}: the last entry is dropped first.
  OSElement boundary(const OSElement& x) const;
  /// Matrix of d: OS^k -> OS^{k-1}.
  const Matrix& boundary_matrix(int k) const;

  /// Basis of dOS^{k+1} = ker d in OS^k: leftmost independent images d e_S.
  const std::vector<OSElement>& reduced_basis(int k) const;

  /// Res_a: OS^k(M) -> OS^{k-1}(M/a). `target` is built on the contraction
  /// of the atom; elements are matched through their ids.
  OSElement residue(const OSElement& x, int atom, const OSAlgebra& target) const;
  Matrix residue_matrix(int k, int atom, const OSAlgebra& target) const;

  /// Matrix of OS^k(source) -> OS^k(this) induced by e_S -> e_S on ids.
  Matrix inclusion_matrix(int k, const OSAlgebra& source) const;
  /// Image of an element of `source` under the map above.
  OSElement include(const OSElement& x, const OSAlgebra& source) const;

  /// Unique x in OS^r with d x = y; throws InvariantViolation if y is not in dOS^r.
  OSElement inverse_boundary(const OSElement& y) const;

  /// Nonzero terms as (ascending atom set, coefficient), in basis order.
  std::vector<std::pair<Mask, Rational>> terms(const OSElement& x) const;
  /// Inverse of `terms`; throws Error if a key is not an NBC set.
  OSElement from_terms(int k, const std::vector<std::pair<Mask, Rational>>& terms) const;
  int index_of(Mask atoms) const;

 private:
  using Sparse = std::vector<std::pair<int, Rational>>;
  const Sparse& straightened(Mask atoms) const;

  Matroid matroid_;
  NbcIndex nbc_;
  std::vector<int> atom_ids_;  // id of each atom's representative
  std::unordered_map<Mask, int> index_;
  std::vector<std::unordered_map<Mask, Sparse>> table_;
  std::vector<Matrix> boundary_;
  std::vector<std::vector<OSElement>> reduced_;
};

/// Coordinates of x in the span of `basis`, or nullopt.
std::optional<Vector> coordinates(const OSElement& x, const std::vector<OSElement>& basis);

/// Matrix whose columns are the coordinate vectors of `elems`.
Matrix columns_of(const std::vector<OSElement>& elems, int dim);

}  // namespace omc
