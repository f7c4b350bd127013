#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omc {

/// Subsets of a ground set of at most 64 positions.
using Mask = std::uint64_t;

using Integer = mpz_class;
using Rational = mpq_class;

/// Bad input: malformed documents, non-bases, non-topes, coloop deletions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed to hold. Signals a bug or an input that
/// slipped past validation; never absorbed silently.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int i) { return (m >> i) & 1U; }

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

/// Next subset of the same cardinality in increasing numeric order (Gosper).
inline Mask next_same_size(Mask m) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

/// Calls f(mask) for every k-subset of {0..n-1} in increasing numeric order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = bit(n);
  for (Mask m = low_bits(k); m < limit; m = next_same_size(m)) {
    f(m);
    if (n == 64 && m == ~Mask{0}) break;
  }
}

/// (-1)^(number of pairs a in A, b in B with a > b): the sign of e_A ^ e_B
/// relative to e_{A u B} for disjoint ascending monomials.
inline int merge_sign(Mask a, Mask b) {
  int inversions = 0;
  while (b) {
    const int e = std::countr_zero(b);
    b &= b - 1;
    inversions += popcount(a & ~low_bits(e + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// Packs the bits of `m` lying in `keep` into consecutive low positions.
inline Mask pack_bits(Mask m, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (Mask k = keep; k; k &= k - 1, ++j)
    if (m & k & (~k + 1)) out |= bit(j);
  return out;
}

/// Inverse of pack_bits: bit j goes to the j-th position of `keep`.
inline Mask unpack_bits(Mask packed, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (Mask k = keep; k; k &= k - 1, ++j)
    if (contains(packed, j)) out |= k & (~k + 1);
  return out;
}

/// Sign of the permutation that sorts `seq`, or 0 if it has repeats.
int sort_sign(std::vector<int>& seq);

std::int64_t binomial(int n, int k);

/// Position of a k-subset among all k-subsets in colex order.
std::size_t colex_rank(Mask m);

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace omc
