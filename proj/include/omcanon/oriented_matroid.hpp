#pragma once

#include "omcanon/chirotope.hpp"
#include "omcanon/matroid.hpp"
#include "omcanon/sign_vector.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace omc {

/// Loopless oriented matroid given by a chirotope.
///
/// Circuits, cocircuits, covectors, topes and atoms are computed once at
/// construction; the object is immutable afterwards. Sign vectors are indexed
/// by position. `ids` identify positions across minors and extensions and
/// must be strictly increasing; `labels` are the user-facing names.
class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  OrientedMatroid(Chirotope chi, std::vector<int> ids, std::vector<std::string> labels);
  /// Ids 0..n-1 and labels "0".."n-1".
  explicit OrientedMatroid(Chirotope chi);

  int rank() const { return chi_.rank(); }
  int size() const { return chi_.size(); }
  Mask ground() const { return low_bits(size()); }

  const Chirotope& chirotope() const { return chi_; }
  const Matroid& underlying() const { return matroid_; }
  const std::vector<int>& ids() const { return ids_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int position_of(int id) const { return matroid_.position_of(id); }
  /// Position with the given label, or -1.
  int position_of_label(const std::string& label) const;

  const std::vector<SignVector>& circuits() const { return circuits_; }
  const std::vector<SignVector>& cocircuits() const { return cocircuits_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const std::vector<SignVector>& topes() const { return topes_; }

  const std::vector<Mask>& atoms() const { return matroid_.atoms(); }
  int atom_of(int position) const { return matroid_.atom_of(position); }

  bool is_covector(const SignVector& x) const;
  bool is_tope(const SignVector& x) const;
  /// No positive circuit.
  bool is_acyclic() const;
  /// M restricted to `s` has no positive circuit.
  bool is_acyclic_set(Mask s) const;

  /// Same matroid with chirotope -chi.
  OrientedMatroid negated() const;
  /// Topes in output order (+ < 0 < -).
  std::vector<SignVector> sorted_topes() const;

 private:
  Chirotope chi_;
  std::vector<int> ids_;
  std::vector<std::string> labels_;
  Matroid matroid_;
  std::vector<SignVector> circuits_;
  std::vector<SignVector> cocircuits_;
  std::vector<SignVector> covectors_;
  std::vector<SignVector> topes_;
};

/// Covectors conformal to P, including 0 and P.
std::vector<SignVector> faces(const OrientedMatroid& om, const SignVector& p);

/// Whether P zeroed on atom `atom` is a covector.
bool is_facet(const OrientedMatroid& om, const SignVector& p, int atom);

/// M / atom(i) with chirotope (chi/i)(B) = chi(B, i). The elements of the
/// atom become loops and are removed; remaining ids and labels are kept.
OrientedMatroid contract(const OrientedMatroid& om, int position);

/// M \ i. Throws Error("rank would drop") for a coloop.
OrientedMatroid delete_element(const OrientedMatroid& om, int position);

OrientedMatroid reorient(const OrientedMatroid& om, const SignVector& p);

/// Single-element lexicographic extension M u q.
struct Extension {
  int new_position = 0;  // q is always the last position of `extended`
  std::vector<std::pair<int, int>> signature;  // (position, sign) forming a basis of M
  OrientedMatroid extended;
};

/// chi'(A, q) = s_i chi(A, b_i) for the first i with chi(A, b_i) != 0.
/// Throws Error if the signature is not a basis; asserts the generality
/// certificate chi'(H, q) != 0 for every independent (r-1)-set H.
Extension lex_extension(const OrientedMatroid& om, const std::vector<std::pair<int, int>>& signature,
                        const std::string& label = "q");

/// (base, +) followed by the lexicographically smallest completion of {base}
/// to a basis, with sign -.
std::vector<std::pair<int, int>> default_signature(const OrientedMatroid& om, int base);

/// Random basis containing `base` at the front with sign +, other entries in
/// random order with random signs.
std::vector<std::pair<int, int>> random_signature(const OrientedMatroid& om, int base, std::mt19937_64& rng);

/// Whether the certificate chi'(H, q) != 0 holds for all independent (r-1)-sets H.
bool is_general(const OrientedMatroid& om, const Extension& ext);

/// Topes P whose nonzero faces X all have X(base) = +.
std::vector<SignVector> bounded_topes(const OrientedMatroid& om, int base);

/// Topes P of M for which (P, +) is a bounded tope of (M u q, q).
std::vector<SignVector> bounded_topes_wrt_extension(const OrientedMatroid& om, const Extension& ext);

/// Signed circuit in B u q with value - at q, on the positions of M u q.
SignVector fundamental_circuit(const Extension& ext, Mask basis);

}  // namespace omc
