#pragma once

#include "omcanon/oriented_matroid.hpp"
#include "omcanon/os_algebra.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

namespace omc {

struct AtomResidueCheck {
  int atom = 0;
  bool facet = false;
  bool pass = false;
  OSElement residue;   // Res_a of the tope form, in OS(M/a)
  OSElement expected;  // boundary facet form, or 0
};

struct ResidueReport {
  std::vector<AtomResidueCheck> atoms;
  bool all_pass() const;
};

/// Canonical forms through the residue recursion, memoized on
/// (rank, element ids, chirotope). All forms of an oriented matroid live in the
/// algebra returned by algebra(om.underlying()).
class CanonicalFormEngine {
 public:
  std::shared_ptr<const OSAlgebra> algebra(const Matroid& m);
  std::shared_ptr<const OSAlgebra> algebra(const OrientedMatroid& om) { return algebra(om.underlying()); }

  /// Reduced form of (M, chi) in dOS^{r-1}; zero unless M is acyclic. Needs r >= 1.
  OSElement form(const OrientedMatroid& om);
  /// Form of (pM, pchi) for a tope P.
  OSElement tope_form(const OrientedMatroid& om, const SignVector& p);
  /// The preimage of tope_form under the boundary, in OS^r. Rank 0 gives chi(empty) 1.
  OSElement nonreduced(const OrientedMatroid& om, const SignVector& p);

  /// For each atom a with representative i: if P zeroed on a is a covector,
  /// Res_a of the form must equal minus the form of P/a for the chirotope
  /// I -> P(i) chi(I, i); otherwise it must vanish.
  ResidueReport check_residue_axioms(const OrientedMatroid& om, const SignVector& p);

  /// The facet chirotope I -> P(i) chi(I, i) on M / atom(i).
  static OrientedMatroid facet_minor(const OrientedMatroid& om, const SignVector& p, int position);

 private:
  std::map<std::pair<std::vector<int>, std::vector<Mask>>, std::shared_ptr<const OSAlgebra>> algebras_;
  std::map<std::tuple<int, std::vector<int>, std::vector<std::int8_t>>, OSElement> forms_;
};

/// sum over B of chi(B) d e_B for ascending bases B (positions).
OSElement canonical_form_from_triangulation(const OSAlgebra& a, const Chirotope& chi, const std::vector<Mask>& bases);

/// sum over B of chi(B) e_B, the matching element of OS^r.
OSElement nonreduced_from_triangulation(const OSAlgebra& a, const Chirotope& chi, const std::vector<Mask>& bases);

}  // namespace omc
