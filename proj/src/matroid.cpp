#include "omcanon/matroid.hpp"

#include <algorithm>
#include <functional>

namespace omc {

namespace {

std::vector<int> select_ids(const std::vector<int>& ids, Mask keep) {
  std::vector<int> out;
  for (int p : bits_of(keep)) out.push_back(ids[static_cast<std::size_t>(p)]);
  return out;
}

}  // namespace

Matroid::Matroid(int rank, std::vector<int> ids, std::vector<Mask> bases)
    : rank_(rank), ids_(std::move(ids)), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw Error("matroid without bases");
  for (Mask b : bases_)
    if (popcount(b) != rank_ || (b & ~ground())) throw Error("basis of wrong size");

  const int n = size();
  atom_of_.assign(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    if (atom_of_[static_cast<std::size_t>(e)] >= 0 || this->rank(bit(e)) == 0) continue;
    Mask cls = 0;
    for (int f = e; f < n; ++f)
      if (this->rank(bit(f)) == 1 && this->rank(bit(e) | bit(f)) == 1) cls |= bit(f);
    const int idx = static_cast<int>(atoms_.size());
    atoms_.push_back(cls);
    for (int f : bits_of(cls)) atom_of_[static_cast<std::size_t>(f)] = idx;
  }

  for (int k = 1; k <= std::min(n, rank_ + 1); ++k) {
    for_each_subset(n, k, [&](Mask s) {
      if (is_independent(s)) return;
      for (Mask t = s; t; t &= t - 1)
        if (!is_independent(s & ~(t & (~t + 1)))) return;
      circuits_.push_back(s);
    });
  }
  std::sort(circuits_.begin(), circuits_.end());
}

bool Matroid::is_basis(Mask s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

bool Matroid::is_independent(Mask s) const {
  if (popcount(s) > rank_) return false;
  return std::any_of(bases_.begin(), bases_.end(), [&](Mask b) { return (s & ~b) == 0; });
}

int Matroid::rank(Mask s) const {
  int best = 0;
  for (Mask b : bases_) {
    best = std::max(best, popcount(s & b));
    if (best == rank_) break;
  }
  return best;
}

Mask Matroid::closure(Mask s) const {
  const int rs = rank(s);
  Mask out = s;
  for (int e = 0; e < size(); ++e)
    if (!contains(s, e) && rank(s | bit(e)) == rs) out |= bit(e);
  return out;
}

std::vector<Mask> Matroid::flats(int r) const {
  std::vector<Mask> out;
  for_each_subset(size(), r, [&](Mask s) {
    if (is_independent(s)) out.push_back(closure(s));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Matroid::is_loopless() const {
  return std::none_of(atom_of_.begin(), atom_of_.end(), [](int a) { return a < 0; });
}

bool Matroid::is_coloop(int position) const {
  return std::all_of(bases_.begin(), bases_.end(), [&](Mask b) { return contains(b, position); });
}

Matroid Matroid::restriction(Mask keep) const {
  const int r = rank(keep);
  std::vector<Mask> bases;
  for (Mask b : bases_)
    if (popcount(b & keep) == r) bases.push_back(pack_bits(b & keep, keep));
  return Matroid(r, select_ids(ids_, keep), std::move(bases));
}

Matroid Matroid::contraction(Mask t) const {
  const int rt = rank(t);
  const Mask keep = ground() & ~t;
  std::vector<Mask> bases;
  for (Mask b : bases_)
    if (popcount(b & t) == rt) bases.push_back(pack_bits(b & keep, keep));
  return Matroid(rank_ - rt, select_ids(ids_, keep), std::move(bases));
}

int Matroid::position_of(int id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  return it == ids_.end() ? -1 : static_cast<int>(it - ids_.begin());
}

NbcIndex::NbcIndex(const Matroid& m) : matroid_(m), rank_(m.rank()) {
  if (!m.is_loopless()) throw Error("NBC data needs a loopless matroid");
  for (Mask a : m.atoms()) representatives_.push_back(std::countr_zero(a));
  const int na = num_atoms();
  for (int k = 1; k <= std::min(na, rank_ + 1); ++k) {
    for_each_subset(na, k, [&](Mask s) {
      if (is_independent(s)) return;
      for (Mask t = s; t; t &= t - 1)
        if (!is_independent(s & ~(t & (~t + 1)))) return;
      circuits_.push_back(s);
    });
  }
  std::sort(circuits_.begin(), circuits_.end());
  for (Mask c : circuits_) broken_.push_back(c & (c - 1));
  sets_.resize(static_cast<std::size_t>(rank_ + 1));
  for (int k = 0; k <= rank_; ++k) {
    for_each_subset(na, k, [&](Mask s) {
      if (is_nbc(s)) sets_[static_cast<std::size_t>(k)].push_back(s);
    });
    sort_lexicographic(sets_[static_cast<std::size_t>(k)]);
  }
}

Mask NbcIndex::representatives(Mask atoms) const {
  Mask out = 0;
  for (int a : bits_of(atoms)) out |= bit(representative(a));
  return out;
}

bool NbcIndex::is_independent(Mask atoms) const { return matroid_.is_independent(representatives(atoms)); }

bool NbcIndex::is_nbc(Mask atoms) const {
  if (!is_independent(atoms)) return false;
  return std::none_of(broken_.begin(), broken_.end(), [&](Mask b) { return (b & ~atoms) == 0; });
}

const std::vector<Mask>& NbcIndex::sets(int k) const {
  static const std::vector<Mask> empty;
  if (k < 0 || k > rank_) return empty;
  return sets_[static_cast<std::size_t>(k)];
}

void sort_lexicographic(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    // Compare ascending bit lists; first differing element decides, prefixes first.
    while (a && b) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
}

Polynomial tutte(const Matroid& m) {
  std::map<std::pair<Mask, Mask>, Polynomial> memo;
  std::function<Polynomial(Mask, Mask)> rec = [&](Mask g, Mask c) -> Polynomial {
    if (g == 0) return {{{0, 0}, 1}};
    const auto key = std::make_pair(g, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int rc = m.rank(c);
    const auto rho = [&](Mask s) { return m.rank(s | c) - rc; };
    const int e = std::countr_zero(g);
    const Mask rest = g & ~bit(e);
    Polynomial out;
    if (rho(bit(e)) == 0) {
      for (const auto& [k, v] : rec(rest, c)) out[{k.first, k.second + 1}] += v;
    } else if (rho(rest) < rho(g)) {
      for (const auto& [k, v] : rec(rest, m.closure(c | bit(e)))) out[{k.first + 1, k.second}] += v;
    } else {
      for (const auto& [k, v] : rec(rest, c)) out[k] += v;
      for (const auto& [k, v] : rec(rest, m.closure(c | bit(e)))) out[k] += v;
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(m.ground(), m.closure(0));
}

std::int64_t beta(const Matroid& m) {
  const auto t = tutte(m);
  const auto it = t.find({1, 0});
  return it == t.end() ? 0 : it->second;
}

std::vector<std::int64_t> whitney_numbers(const Matroid& m) {
  const int r = m.rank();
  // coefficients of T(1 - t, 0) in t
  std::vector<std::int64_t> poly(static_cast<std::size_t>(r + 1), 0);
  for (const auto& [k, v] : tutte(m)) {
    if (k.second != 0) continue;
    const int i = k.first;
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = v * binomial(i, j) * ((j & 1) ? -1 : 1);
      poly[static_cast<std::size_t>(j)] += term;
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(r + 1), 0);
  for (int k = 0; k <= r; ++k) {
    const std::int64_t c = poly[static_cast<std::size_t>(r - k)];
    out[static_cast<std::size_t>(k)] = (r & 1) ? -c : c;
  }
  return out;
}

}  // namespace omc
