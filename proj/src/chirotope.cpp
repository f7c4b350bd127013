#include "omcanon/chirotope.hpp"

#include <algorithm>

namespace omc {

Chirotope::Chirotope(int rank, int size, std::vector<std::int8_t> values)
    : rank_(rank), size_(size), values_(std::move(values)) {
  if (rank < 0 || size < rank || size > 64) throw Error("bad chirotope dimensions");
  if (static_cast<std::int64_t>(values_.size()) != binomial(size, rank))
    throw Error("chirotope table has " + std::to_string(values_.size()) + " entries, expected " +
                std::to_string(binomial(size, rank)));
  for (auto v : values_)
    if (v < -1 || v > 1) throw Error("chirotope value out of range");
}

Chirotope Chirotope::tabulate(int rank, int size, const std::function<int(Mask)>& sign) {
  std::vector<std::int8_t> values(static_cast<std::size_t>(binomial(size, rank)), 0);
  for_each_subset(size, rank, [&](Mask m) {
    const int s = sign(m);
    values[colex_rank(m)] = static_cast<std::int8_t>(s > 0 ? 1 : (s < 0 ? -1 : 0));
  });
  return Chirotope(rank, size, std::move(values));
}

int Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_) throw Error("chirotope tuple of wrong length");
  std::vector<int> seq(tuple.begin(), tuple.end());
  const int s = sort_sign(seq);
  if (s == 0) return 0;
  return s * at(mask_of(seq));
}

int Chirotope::with_last(Mask a, int e) const {
  if (contains(a, e)) return 0;
  const int after = popcount(a & ~low_bits(e + 1));
  const int v = at(a | bit(e));
  return (after & 1) ? -v : v;
}

Chirotope Chirotope::negated() const {
  std::vector<std::int8_t> v(values_);
  for (auto& x : v) x = static_cast<std::int8_t>(-x);
  return Chirotope(rank_, size_, std::move(v));
}

std::optional<ChirotopeDiagnostic> validate_chirotope(const Chirotope& chi) {
  const int r = chi.rank();
  const int n = chi.size();
  std::vector<Mask> bases;
  for_each_subset(n, r, [&](Mask m) {
    if (chi.at(m) != 0) bases.push_back(m);
  });
  if (bases.empty()) return ChirotopeDiagnostic{"chirotope is identically zero", {}};

  Mask covered = 0;
  for (Mask b : bases) covered |= b;
  for (int e = 0; e < n; ++e)
    if (!contains(covered, e)) return ChirotopeDiagnostic{"loop: " + std::to_string(e), {e}};

  const auto is_basis = [&](Mask m) { return chi.at(m) != 0; };
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (Mask x = b1 & ~b2; x; x &= x - 1) {
        const Mask xb = x & (~x + 1);
        bool found = false;
        for (Mask y = b2 & ~b1; y && !found; y &= y - 1) {
          const Mask yb = y & (~y + 1);
          found = is_basis((b1 & ~xb) | yb);
        }
        if (!found) {
          auto t = bits_of(b1);
          for (int e : bits_of(b2)) t.push_back(e);
          return ChirotopeDiagnostic{"basis exchange fails", t};
        }
      }
    }
  }

  if (r >= 2) {
    std::optional<ChirotopeDiagnostic> bad;
    for_each_subset(n, r - 2, [&](Mask a) {
      if (bad) return;
      const Mask rest = low_bits(n) & ~a;
      const auto others = bits_of(rest);
      const int m = static_cast<int>(others.size());
      for_each_subset(m, 4, [&](Mask pick) {
        if (bad) return;
        const auto idx = bits_of(pick);
        const int p = others[idx[0]], q = others[idx[1]], s = others[idx[2]], t = others[idx[3]];
        const auto ev = [&](int x, int y) {
          std::vector<int> tup = bits_of(a);
          tup.push_back(x);
          tup.push_back(y);
          return chi(tup);
        };
        const int terms[3] = {ev(p, q) * ev(s, t), -ev(p, s) * ev(q, t), ev(p, t) * ev(q, s)};
        const bool has_pos = std::any_of(terms, terms + 3, [](int v) { return v > 0; });
        const bool has_neg = std::any_of(terms, terms + 3, [](int v) { return v < 0; });
        if (has_pos != has_neg) {
          std::vector<int> tup = bits_of(a);
          tup.insert(tup.end(), {p, q, s, t});
          bad = ChirotopeDiagnostic{"Grassmann-Pluecker relation fails", tup};
        }
      });
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Chirotope reorient(const Chirotope& chi, const SignVector& p) {
  if (p.support() != low_bits(chi.size())) throw Error("reorientation needs a full-support sign vector");
  return Chirotope::tabulate(chi.rank(), chi.size(), [&](Mask b) {
    const int v = chi.at(b);
    return (popcount(b & p.neg) & 1) ? -v : v;
  });
}

}  // namespace omc
