#pragma once

#include "omcanon/core.hpp"
#include "omcanon/sign_vector.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace omc {

/// Alternating sign map on ordered r-tuples of positions 0..n-1.
///
/// Only ascending tuples are stored (colex order); any other ordering is
/// resolved through its permutation parity on lookup, and tuples with a
/// repeated entry evaluate to 0.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int rank, int size, std::vector<std::int8_t> values);

  /// Builds the table by calling sign(mask) for every ascending r-subset.
  static Chirotope tabulate(int rank, int size, const std::function<int(Mask)>& sign);

  int rank() const { return rank_; }
  int size() const { return size_; }

  /// Value on the ascending tuple listing the elements of `subset`.
  int at(Mask subset) const { return values_[colex_rank(subset)]; }

  /// Value on an ordered tuple of positions.
  int operator()(std::span<const int> tuple) const;

  /// chi(A, e) for an ascending set A and a trailing element e.
  int with_last(Mask a, int e) const;

  const std::vector<std::int8_t>& values() const { return values_; }
  Chirotope negated() const;

  bool operator==(const Chirotope&) const = default;

 private:
  int rank_ = 0;
  int size_ = 0;
  std::vector<std::int8_t> values_;
};

/// First violated axiom, if any.
struct ChirotopeDiagnostic {
  std::string message;
  std::vector<int> tuple;  // positions involved
};

/// Checks nonvanishing, looplessness, basis exchange and the three-term
/// Grassmann-Pluecker relations. Exhaustive; meant for |E| around 10.
std::optional<ChirotopeDiagnostic> validate_chirotope(const Chirotope& chi);

/// pchi(B) = (-1)^{|B n P^-|} chi(B). P must have full support.
Chirotope reorient(const Chirotope& chi, const SignVector& p);

}  // namespace omc
