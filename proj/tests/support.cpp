#include "support.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace omc::test {

namespace {

Matrix matrix_of(const std::vector<std::vector<int>>& rows) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

OrientedMatroid labelled(const Matrix& m, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  for (int i = 0; i < m.cols(); ++i) ids.push_back(i);
  return OrientedMatroid(chirotope_from_matrix(m), ids, labels);
}

using Poly = std::vector<std::int64_t>;

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

OrientedMatroid f1() {
  return OrientedMatroid(Chirotope::tabulate(2, 4, [](Mask) { return 1; }));
}

Matrix f2_matrix() { return matrix_of({{1, 0, -1, 0, -1}, {0, 1, 0, -1, -1}, {1, 1, 1, 1, 1}}); }

OrientedMatroid f2() { return labelled(f2_matrix(), {"1", "2", "3", "4", "5"}); }

Matrix f2inf_matrix() { return matrix_of({{0, 1, 0, -1, 0, -1}, {0, 0, 1, 0, -1, -1}, {1, 1, 1, 1, 1, 1}}); }

OrientedMatroid f2inf() { return labelled(f2inf_matrix(), {"0", "1", "2", "3", "4", "5"}); }

Matrix random_arrangement(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    Matrix m(3, n);
    bool zero_col = false;
    for (int j = 0; j < n; ++j) {
      bool nz = false;
      for (int i = 0; i < 3; ++i) {
        m(i, j) = entry(rng);
        nz = nz || sgn(m(i, j)) != 0;
      }
      zero_col = zero_col || !nz;
    }
    if (!zero_col && rank(m) == 3) return m;
  }
}

OrientedMatroid from_matrix(const Matrix& m) { return OrientedMatroid(chirotope_from_matrix(m)); }

std::vector<Matrix> random_instances() {
  std::vector<Matrix> out;
  for (int i = 0; i < 10; ++i) out.push_back(random_arrangement(1000 + static_cast<std::uint64_t>(i), 5 + i % 4));
  return out;
}

SignVector sv(const std::string& text, int n) { return parse_sign_vector(text, n); }

OSElement os(const OSAlgebra& a, int grade, const std::vector<std::pair<std::vector<int>, int>>& terms) {
  OSElement x = a.zero(grade);
  for (const auto& [s, c] : terms) x = x + Rational(c) * a.monomial(s);
  return x;
}

OSElement d_monomial(const OSAlgebra& a, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  OSElement x = a.zero(k - 1);
  for (int i = 0; i < k; ++i) {
    std::vector<int> rest = s;
    rest.erase(rest.begin() + (k - 1 - i));
    x = x + Rational((i & 1) ? -1 : 1) * a.monomial(rest);
  }
  return x;
}

Rational det3(const Matrix& m, int a, int b, int c) {
  const auto e = [&](int i, int col) { return m(i, col); };
  return e(0, a) * e(1, b) * e(2, c) + e(0, b) * e(1, c) * e(2, a) + e(0, c) * e(1, a) * e(2, b) -
         e(0, c) * e(1, b) * e(2, a) - e(0, b) * e(1, a) * e(2, c) - e(0, a) * e(1, c) * e(2, b);
}

int chi_rank(const Chirotope& chi, Mask s) {
  int best = 0;
  for_each_subset(chi.size(), chi.rank(), [&](Mask b) {
    if (chi.at(b) != 0) best = std::max(best, popcount(b & s));
  });
  return best;
}

namespace {

template <class F>
void for_each_sign_vector(int n, bool full, F&& f) {
  std::vector<int> digits(static_cast<std::size_t>(n), full ? 1 : 0);
  while (true) {
    SignVector x;
    for (int i = 0; i < n; ++i) x.set(i, digits[static_cast<std::size_t>(i)]);
    f(x);
    int i = 0;
    while (i < n) {
      int& d = digits[static_cast<std::size_t>(i)];
      if (full) {
        if (d == 1) {
          d = -1;
          break;
        }
        d = 1;
      } else {
        if (d == 0) {
          d = 1;
          break;
        }
        if (d == 1) {
          d = -1;
          break;
        }
        d = 0;
      }
      ++i;
    }
    if (i == n) return;
  }
}

bool orthogonal_to_all(const SignVector& x, const std::vector<SignVector>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const SignVector& c) { return orthogonal(x, c); });
}

}  // namespace

std::vector<SignVector> brute_covectors(const std::vector<SignVector>& circuits, int n) {
  std::vector<SignVector> out;
  for_each_sign_vector(n, false, [&](const SignVector& x) {
    if (orthogonal_to_all(x, circuits)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> brute_topes(const std::vector<SignVector>& circuits, int n) {
  std::vector<SignVector> out;
  for_each_sign_vector(n, true, [&](const SignVector& x) {
    if (orthogonal_to_all(x, circuits)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> brute_minimal_orthogonal(const std::vector<SignVector>& vectors, int n) {
  std::vector<SignVector> all;
  for_each_sign_vector(n, false, [&](const SignVector& x) {
    if (!x.is_zero() && orthogonal_to_all(x, vectors)) all.push_back(x);
  });
  std::vector<SignVector> out;
  for (const auto& x : all) {
    const bool minimal = std::none_of(all.begin(), all.end(), [&](const SignVector& y) {
      return y.support() != x.support() && (y.support() & ~x.support()) == 0;
    });
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial subset_tutte(const Chirotope& chi) {
  const int n = chi.size();
  const int r = chi.rank();
  Polynomial t;
  for (Mask a = 0; a < bit(n); ++a) {
    const int ra = chi_rank(chi, a);
    const int i = r - ra;
    const int j = popcount(a) - ra;
    // (x-1)^i (y-1)^j
    for (int p = 0; p <= i; ++p)
      for (int q = 0; q <= j; ++q) {
        const std::int64_t c = binomial(i, p) * binomial(j, q) * (((i - p) + (j - q)) % 2 ? -1 : 1);
        t[{p, q}] += c;
      }
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

std::int64_t crapo_beta(const Chirotope& chi) {
  const int n = chi.size();
  std::int64_t s = 0;
  for (Mask a = 0; a < bit(n); ++a) s += ((popcount(a) & 1) ? -1 : 1) * chi_rank(chi, a);
  return (chi.rank() & 1) ? -s : s;
}

std::vector<std::int64_t> dc_characteristic(const Chirotope& chi) {
  const int r = chi.rank();
  std::function<Poly(Mask, Mask)> rec = [&](Mask g, Mask c) -> Poly {
    const int rc = chi_rank(chi, c);
    const auto rho = [&](Mask s) { return chi_rank(chi, s | c) - rc; };
    for (int e : bits_of(g))
      if (rho(bit(e)) == 0) return Poly{0};
    if (g == 0) return Poly{1};
    const int e = 63 - std::countl_zero(g);
    const Mask rest = g & ~bit(e);
    if (rho(rest) < rho(g)) {
      const Poly p = rec(rest, c);
      Poly out(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= p[i];
      }
      return out;
    }
    return poly_sub(rec(rest, c), rec(rest, c | bit(e)));
  };
  Poly p = rec(low_bits(chi.size()), 0);
  p.resize(static_cast<std::size_t>(r + 1), 0);
  std::vector<std::int64_t> out;
  for (int k = 0; k <= r; ++k) out.push_back(p[static_cast<std::size_t>(r - k)]);
  return out;
}

OSElement random_straighten(const OSAlgebra& a, Mask atoms, std::uint64_t seed) {
  const NbcIndex& nbc = a.nbc();
  const int na = nbc.num_atoms();
  // circuits on atoms from the rank oracle of the matroid
  std::vector<Mask> circuits;
  for (Mask s = 1; s < bit(na); ++s) {
    if (nbc.is_independent(s)) continue;
    bool minimal = true;
    for (int e : bits_of(s)) minimal = minimal && nbc.is_independent(s & ~bit(e));
    if (minimal) circuits.push_back(s);
  }
  std::mt19937_64 rng(seed);
  std::function<OSElement(Mask)> rec = [&](Mask s) -> OSElement {
    const int k = popcount(s);
    OSElement out = a.zero(k);
    if (!nbc.is_independent(s)) return out;
    std::vector<Mask> options;
    for (Mask c : circuits)
      if (((c & (c - 1)) & ~s) == 0) options.push_back(c);
    if (options.empty()) {
      out.coords[static_cast<std::size_t>(a.index_of(s))] = 1;
      return out;
    }
    const Mask c = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const Mask bc = c & (c - 1);
    const Mask rest = s & ~bc;
    const auto cs = bits_of(c);
    for (std::size_t j = 1; j < cs.size(); ++j) {
      const Mask cj = c & ~bit(cs[j]);
      const int sign = merge_sign(bc, rest) * ((j & 1) ? 1 : -1) * merge_sign(cj, rest);
      out = out + Rational(sign) * rec(cj | rest);
    }
    return out;
  };
  return rec(atoms);
}

}  // namespace omc::test
