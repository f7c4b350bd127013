#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's enumeration code paths.

#include "omcanon/canonical_forms.hpp"
#include "omcanon/realization.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace omc::test {

/// F1: rank 2 on {0,1,2,3}, chi(i,j) = + for i < j.
OrientedMatroid f1();
/// F2: the 3x5 matrix with labels 1..5.
Matrix f2_matrix();
OrientedMatroid f2();
/// F2 with the line at infinity (0,0,1) prepended as element "0".
Matrix f2inf_matrix();
OrientedMatroid f2inf();

/// Uniform-ish random rank-3 integer configuration with `n` nonzero columns.
Matrix random_arrangement(std::uint64_t seed, int n);
OrientedMatroid from_matrix(const Matrix& m);
/// Ten seeded random rank-3 arrangements with 5..8 columns.
std::vector<Matrix> random_instances();

/// Element tuple of a label list, e.g. sv("+,+,-,-").
SignVector sv(const std::string& text, int n);

/// OS element sum_i c_i e_{S_i} given on position tuples.
OSElement os(const OSAlgebra& a, int grade, const std::vector<std::pair<std::vector<int>, int>>& terms);
/// d e_S with the last entry dropped first, evaluated term by term.
OSElement d_monomial(const OSAlgebra& a, const std::vector<int>& s);

// ---- oracles ----

/// 3x3 determinant by the rule of Sarrus.
Rational det3(const Matrix& m, int a, int b, int c);

/// Rank of a set of positions, from the chirotope alone.
int chi_rank(const Chirotope& chi, Mask s);

/// All X in {+,0,-}^E orthogonal to every signed circuit.
std::vector<SignVector> brute_covectors(const std::vector<SignVector>& circuits, int n);
/// All T in {+,-}^E orthogonal to every signed circuit.
std::vector<SignVector> brute_topes(const std::vector<SignVector>& circuits, int n);
/// Minimal-support nonzero vectors orthogonal to every given covector.
std::vector<SignVector> brute_minimal_orthogonal(const std::vector<SignVector>& vectors, int n);

/// Tutte polynomial by the subset expansion.
Polynomial subset_tutte(const Chirotope& chi);
/// Crapo's formula (-1)^r sum_A (-1)^{|A|} r(A).
std::int64_t crapo_beta(const Chirotope& chi);
/// Characteristic polynomial by deletion-contraction; entry k is the
/// coefficient of t^{r-k}.
std::vector<std::int64_t> dc_characteristic(const Chirotope& chi);

/// Straightening by a randomized choice of broken circuit at every step.
OSElement random_straighten(const OSAlgebra& a, Mask atoms, std::uint64_t seed);

}  // namespace omc::test
