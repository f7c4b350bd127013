#pragma once

#include "omcanon/core.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace omc {

/// Bivariate polynomial with integer coefficients, keyed by (deg_x, deg_y).
using Polynomial = std::map<std::pair<int, int>, std::int64_t>;

/// Underlying matroid on positions 0..n-1, given by its list of bases.
///
/// `ids` are the global element identifiers of the positions; they let
/// minors and truncations refer back to elements of the matroid they came from.
class Matroid {
 public:
  Matroid() = default;
  Matroid(int rank, std::vector<int> ids, std::vector<Mask> bases);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(ids_.size()); }
  Mask ground() const { return low_bits(size()); }
  const std::vector<int>& ids() const { return ids_; }
  const std::vector<Mask>& bases() const { return bases_; }

  bool is_basis(Mask s) const;
  bool is_independent(Mask s) const;
  int rank(Mask s) const;
  Mask closure(Mask s) const;

  /// Rank-1 flats ordered by their minimum position.
  const std::vector<Mask>& atoms() const { return atoms_; }
  int atom_of(int position) const { return atom_of_[static_cast<std::size_t>(position)]; }

  /// Minimal dependent sets, ascending numeric order.
  const std::vector<Mask>& circuits() const { return circuits_; }

  std::vector<Mask> flats(int r) const;
  std::vector<Mask> hyperplanes() const { return flats(rank_ - 1); }

  bool is_loopless() const;
  bool is_coloop(int position) const;

  /// M|S re-indexed onto the positions of S. The rank may drop.
  Matroid restriction(Mask keep) const;
  /// M/T on E \ T. Loops of the contraction are kept.
  Matroid contraction(Mask t) const;

  /// Position holding global id `id`, or -1.
  int position_of(int id) const;

  bool operator==(const Matroid& o) const { return rank_ == o.rank_ && ids_ == o.ids_ && bases_ == o.bases_; }

 private:
  int rank_ = 0;
  std::vector<int> ids_;
  std::vector<Mask> bases_;  // sorted
  std::vector<Mask> atoms_;
  std::vector<int> atom_of_;
  std::vector<Mask> circuits_;
};

/// No-broken-circuit data on the atoms of a loopless matroid.
///
/// Atoms are indexed by the order of their minimum positions; sets of atoms
/// are masks over those indices. Broken circuits drop the minimum atom.
class NbcIndex {
 public:
  NbcIndex() = default;
  explicit NbcIndex(const Matroid& m);

  int num_atoms() const { return static_cast<int>(representatives_.size()); }
  int representative(int atom) const { return representatives_[static_cast<std::size_t>(atom)]; }
  /// Positions of the representatives of the atoms in `atoms`.
  Mask representatives(Mask atoms) const;

  bool is_independent(Mask atoms) const;
  bool is_nbc(Mask atoms) const;

  const std::vector<Mask>& circuits() const { return circuits_; }
  const std::vector<Mask>& broken_circuits() const { return broken_; }
  /// NBC k-sets in lexicographic order of their ascending atom lists.
  const std::vector<Mask>& sets(int k) const;

 private:
  Matroid matroid_;
  int rank_ = 0;
  std::vector<int> representatives_;
  std::vector<Mask> circuits_;
  std::vector<Mask> broken_;
  std::vector<std::vector<Mask>> sets_;
};

/// Sorts atom/element masks lexicographically by their ascending bit lists.
void sort_lexicographic(std::vector<Mask>& sets);

/// Tutte polynomial by deletion-contraction over E, memoized on minors.
Polynomial tutte(const Matroid& m);

/// Coefficient of x^1 y^0 of the Tutte polynomial.
std::int64_t beta(const Matroid& m);

/// Coefficients of the characteristic polynomial chi_M(t) = (-1)^r T(1-t, 0);
/// entry k is the coefficient of t^{r-k}, i.e. the k-th Whitney number.
std::vector<std::int64_t> whitney_numbers(const Matroid& m);

}  // namespace omc
