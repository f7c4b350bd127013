#include "omcanon/core.hpp"
#include "omcanon/sign_vector.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace omc {

namespace {

struct BinomialTable {
  std::array<std::array<std::int64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

std::string strip(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return table().c[n][k];
}

std::size_t colex_rank(Mask m) {
  std::size_t r = 0;
  int j = 1;
  while (m) {
    const int e = std::countr_zero(m);
    m &= m - 1;
    r += static_cast<std::size_t>(binomial(e, j));
    ++j;
  }
  return r;
}

int sort_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i - 1] == seq[i]) return 0;
  return sign;
}

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool output_less(const SignVector& a, const SignVector& b, int n) {
  // + < 0 < -
  const auto key = [](int s) { return s > 0 ? 0 : (s == 0 ? 1 : 2); };
  for (int i = 0; i < n; ++i) {
    const int x = key(a[i]);
    const int y = key(b[i]);
    if (x != y) return x < y;
  }
  return false;
}

std::string to_string(const SignVector& x, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out.push_back(',');
    const int s = x[i];
    out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  }
  return out;
}

SignVector parse_sign_vector(std::string_view text, int n) {
  const std::string s = strip(text);
  SignVector x;
  int i = 0;
  bool expect_sign = true;
  for (char ch : s) {
    if (expect_sign) {
      if (i >= n) throw Error("sign vector '" + std::string(text) + "' is longer than the ground set");
      if (ch == '+') x.set(i, 1);
      else if (ch == '-') x.set(i, -1);
      else if (ch != '0') throw Error("bad sign character '" + std::string(1, ch) + "'");
      ++i;
      expect_sign = false;
    } else {
      if (ch != ',') throw Error("expected ',' in sign vector '" + std::string(text) + "'");
      expect_sign = true;
    }
  }
  if (i != n || (expect_sign && n > 0))
    throw Error("sign vector '" + std::string(text) + "' has " + std::to_string(i) + " entries, expected " +
                std::to_string(n));
  return x;
}

}  // namespace omc
