#pragma once

#include "omcanon/core.hpp"

#include <compare>
#include <string>

namespace omc {

/// A function E -> {+,0,-} stored as two disjoint position masks.
struct SignVector {
  Mask pos = 0;
  Mask neg = 0;

  Mask support() const { return pos | neg; }
  Mask negative_part() const { return neg; }
  bool is_zero() const { return (pos | neg) == 0; }

  int operator[](int i) const { return contains(pos, i) ? 1 : (contains(neg, i) ? -1 : 0); }

  void set(int i, int s) {
    pos &= ~bit(i);
    neg &= ~bit(i);
    if (s > 0) pos |= bit(i);
    if (s < 0) neg |= bit(i);
  }

  SignVector operator-() const { return {neg, pos}; }

  /// X o Y: X where X is nonzero, Y elsewhere.
  SignVector compose(const SignVector& y) const {
    const Mask free = ~support();
    return {pos | (y.pos & free), neg | (y.neg & free)};
  }

  SignVector restricted(Mask keep) const { return {pos & keep, neg & keep}; }

  /// X <= P in the face order: X(e) is 0 or P(e) everywhere.
  bool conforms_to(const SignVector& p) const {
    return (pos & ~p.pos) == 0 && (neg & ~p.neg) == 0;
  }

  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector&) const = default;
};

inline bool orthogonal(const SignVector& x, const SignVector& y) {
  const Mask agree = (x.pos & y.pos) | (x.neg & y.neg);
  const Mask disagree = (x.pos & y.neg) | (x.neg & y.pos);
  return (agree == 0) == (disagree == 0);
}

inline SignVector pack(const SignVector& x, Mask keep) { return {pack_bits(x.pos, keep), pack_bits(x.neg, keep)}; }

inline SignVector full_positive(int n) { return {low_bits(n), 0}; }

/// Output order: position by position with + < 0 < -.
bool output_less(const SignVector& a, const SignVector& b, int n);

/// "+,-,0,+" for the first n positions.
std::string to_string(const SignVector& x, int n);

/// Parses "+,+,-" (whitespace ignored); throws Error on a bad character or length.
SignVector parse_sign_vector(std::string_view text, int n);

}  // namespace omc
