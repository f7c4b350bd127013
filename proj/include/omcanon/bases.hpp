#pragma once

#include "omcanon/canonical_forms.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace omc {

using FormList = std::vector<std::pair<SignVector, OSElement>>;

/// M^(k) together with the general extension q_{k+1} used to truncate it.
struct FlagLevel {
  OrientedMatroid om;
  Extension ext;
};

/// M = M^(0), ..., M^(r-1) with M^(k+1) = (M^(k) u q_{k+1}) / q_{k+1}.
struct Flag {
  std::vector<FlagLevel> levels;
  int base = 0;       // position perturbed by q_1
  int attempts = 1;   // signatures tried for q_1
};

/// Extension of M perturbing `base`: the default signature first, then up to
/// 32 seeded random ones until T^0 is contained in T^q. Throws Error when
/// all attempts fail.
Extension perturbing_extension(const OrientedMatroid& om, int base, std::uint64_t seed, int* attempts = nullptr);

Flag build_flag(const OrientedMatroid& om, std::uint64_t seed, int base = 0);

/// Forms of the topes in T^q; throws InvariantViolation unless they are a basis of dOS^{r-1}.
FormList tq_basis(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext);

struct SimplexCheck {
  Mask basis = 0;
  SignVector circuit;             // C_{B u q}, value - at q
  std::vector<SignVector> topes;  // T_B^q
  OSElement lhs;
  OSElement rhs;
  bool pass = false;
};

/// (-1)^{|C^-| - 1} chi(B) d e_B against the sum of the forms over T_B^q.
SimplexCheck simplex_identity_check(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext,
                                    Mask basis);

/// Forms of T^{q_1..q_k} computed in M^(k-1) and carried to dOS^{r-k}(M).
/// Throws InvariantViolation unless they form a basis. 1 <= k <= r.
FormList graded_basis(CanonicalFormEngine& engine, const Flag& flag, int k);

/// Coordinates of x in `basis`; throws InvariantViolation if x is outside the span.
Vector expand_in_basis(const OSElement& x, const std::vector<OSElement>& basis);

/// Coordinates of left[i] ^ right[j] in `target`.
Vector structure_constants(const OSAlgebra& a, const OSElement& left, const OSElement& right,
                           const std::vector<OSElement>& target);

struct AomotoReport {
  int reduced_top_dim = 0;
  int image_rank = 0;
  int dim_h = 0;
  std::int64_t beta = 0;
  bool certificate = false;  // image + span of T^0 forms is everything
  bool is_generic = false;   // dim_h == beta and the certificate holds
  std::vector<SignVector> t0;
  std::vector<SignVector> tq;
  std::vector<OSElement> basis_images;
  std::vector<int> cohomology_dims;  // degrees 0..r-1
};

/// omega = sum_s weights[s] (e_s - e_base); weights[base] is ignored.
AomotoReport aomoto(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext,
                    const std::vector<Rational>& weights, int base);

}  // namespace omc
