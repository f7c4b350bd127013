#include "omcanon/oriented_matroid.hpp"

#include <algorithm>
#include <set>

namespace omc {

namespace {

std::vector<Mask> bases_of(const Chirotope& chi) {
  std::vector<Mask> out;
  for_each_subset(chi.size(), chi.rank(), [&](Mask m) {
    if (chi.at(m) != 0) out.push_back(m);
  });
  return out;
}

SignVector circuit_from_set(const Chirotope& chi, Mask s) {
  SignVector c;
  int i = 0;
  for (int e : bits_of(s)) {
    const int v = chi.at(s & ~bit(e));
    c.set(e, (i & 1) ? -v : v);
    ++i;
  }
  return c;
}

}  // namespace

OrientedMatroid::OrientedMatroid(Chirotope chi, std::vector<int> ids, std::vector<std::string> labels)
    : chi_(std::move(chi)), ids_(std::move(ids)), labels_(std::move(labels)) {
  const int n = chi_.size();
  const int r = chi_.rank();
  if (static_cast<int>(ids_.size()) != n || static_cast<int>(labels_.size()) != n)
    throw Error("ids/labels do not match the chirotope size");
  for (std::size_t i = 1; i < ids_.size(); ++i)
    if (ids_[i - 1] >= ids_[i]) throw Error("element ids must be strictly increasing");
  matroid_ = Matroid(r, ids_, bases_of(chi_));
  if (!matroid_.is_loopless()) {
    for (int e = 0; e < n; ++e)
      if (matroid_.atom_of(e) < 0) throw Error("loop: " + labels_[static_cast<std::size_t>(e)]);
  }

  std::set<SignVector> circ;
  if (r < n) {
    for_each_subset(n, r + 1, [&](Mask s) {
      if (matroid_.rank(s) != r) return;
      const SignVector c = circuit_from_set(chi_, s);
      circ.insert(c);
      circ.insert(-c);
    });
  }
  circuits_.assign(circ.begin(), circ.end());

  std::set<SignVector> coc;
  if (r >= 1) {
    for_each_subset(n, r - 1, [&](Mask h) {
      if (!matroid_.is_independent(h)) return;
      SignVector y;
      for (int e = 0; e < n; ++e) y.set(e, chi_.with_last(h, e));
      coc.insert(y);
      coc.insert(-y);
    });
  }
  cocircuits_.assign(coc.begin(), coc.end());

  std::set<SignVector> cov{SignVector{}};
  std::vector<SignVector> work{SignVector{}};
  while (!work.empty()) {
    const SignVector x = work.back();
    work.pop_back();
    if (x.support() == ground()) continue;
    for (const auto& y : cocircuits_) {
      const SignVector z = x.compose(y);
      if (cov.insert(z).second) work.push_back(z);
    }
  }
  covectors_.assign(cov.begin(), cov.end());
  for (const auto& x : covectors_)
    if (x.support() == ground()) topes_.push_back(x);
}

OrientedMatroid::OrientedMatroid(Chirotope chi) {
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int i = 0; i < chi.size(); ++i) {
    ids.push_back(i);
    labels.push_back(std::to_string(i));
  }
  *this = OrientedMatroid(std::move(chi), std::move(ids), std::move(labels));
}

int OrientedMatroid::position_of_label(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool OrientedMatroid::is_covector(const SignVector& x) const {
  return std::binary_search(covectors_.begin(), covectors_.end(), x);
}

bool OrientedMatroid::is_tope(const SignVector& x) const {
  return std::binary_search(topes_.begin(), topes_.end(), x);
}

bool OrientedMatroid::is_acyclic() const { return is_acyclic_set(ground()); }

bool OrientedMatroid::is_acyclic_set(Mask s) const {
  return std::none_of(circuits_.begin(), circuits_.end(),
                      [&](const SignVector& c) { return c.neg == 0 && (c.pos & ~s) == 0; });
}

OrientedMatroid OrientedMatroid::negated() const { return OrientedMatroid(chi_.negated(), ids_, labels_); }

std::vector<SignVector> OrientedMatroid::sorted_topes() const {
  std::vector<SignVector> out = topes_;
  const int n = size();
  std::sort(out.begin(), out.end(), [n](const SignVector& a, const SignVector& b) { return output_less(a, b, n); });
  return out;
}

std::vector<SignVector> faces(const OrientedMatroid& om, const SignVector& p) {
  std::vector<SignVector> out;
  for (const auto& x : om.covectors())
    if (x.conforms_to(p)) out.push_back(x);
  return out;
}

bool is_facet(const OrientedMatroid& om, const SignVector& p, int atom) {
  const Mask a = om.atoms()[static_cast<std::size_t>(atom)];
  return om.is_covector(p.restricted(~a));
}

OrientedMatroid contract(const OrientedMatroid& om, int position) {
  const int atom = om.atom_of(position);
  const Mask keep = om.ground() & ~om.atoms()[static_cast<std::size_t>(atom)];
  const Chirotope& chi = om.chirotope();
  const Chirotope c = Chirotope::tabulate(om.rank() - 1, popcount(keep),
                                          [&](Mask b) { return chi.with_last(unpack_bits(b, keep), position); });
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int p : bits_of(keep)) {
    ids.push_back(om.ids()[static_cast<std::size_t>(p)]);
    labels.push_back(om.labels()[static_cast<std::size_t>(p)]);
  }
  return OrientedMatroid(c, std::move(ids), std::move(labels));
}

OrientedMatroid delete_element(const OrientedMatroid& om, int position) {
  if (om.underlying().is_coloop(position)) throw Error("rank would drop");
  const Mask keep = om.ground() & ~bit(position);
  const Chirotope& chi = om.chirotope();
  const Chirotope c =
      Chirotope::tabulate(om.rank(), popcount(keep), [&](Mask b) { return chi.at(unpack_bits(b, keep)); });
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int p : bits_of(keep)) {
    ids.push_back(om.ids()[static_cast<std::size_t>(p)]);
    labels.push_back(om.labels()[static_cast<std::size_t>(p)]);
  }
  return OrientedMatroid(c, std::move(ids), std::move(labels));
}

OrientedMatroid reorient(const OrientedMatroid& om, const SignVector& p) {
  return OrientedMatroid(reorient(om.chirotope(), p), om.ids(), om.labels());
}

Extension lex_extension(const OrientedMatroid& om, const std::vector<std::pair<int, int>>& signature,
                        const std::string& label) {
  const int r = om.rank();
  const int n = om.size();
  if (n >= 64) throw Error("ground set too large to extend");
  Mask b = 0;
  for (const auto& [e, s] : signature) {
    if (e < 0 || e >= n || contains(b, e) || (s != 1 && s != -1)) throw Error("malformed extension signature");
    b |= bit(e);
  }
  if (static_cast<int>(signature.size()) != r || !om.underlying().is_basis(b))
    throw Error("extension signature is not a basis");

  const Chirotope& chi = om.chirotope();
  const int q = n;
  const Chirotope ext = Chirotope::tabulate(r, n + 1, [&](Mask m) {
    if (!contains(m, q)) return chi.at(m);
    const Mask a = m & ~bit(q);
    for (const auto& [e, s] : signature) {
      const int v = chi.with_last(a, e);
      if (v != 0) return s * v;
    }
    return 0;
  });

  std::vector<int> ids = om.ids();
  std::vector<std::string> labels = om.labels();
  ids.push_back(ids.empty() ? 0 : ids.back() + 1);
  labels.push_back(label);
  Extension out{q, signature, OrientedMatroid(ext, std::move(ids), std::move(labels))};
  if (!is_general(om, out)) throw InvariantViolation("lexicographic extension is not general");
  return out;
}

std::vector<std::pair<int, int>> default_signature(const OrientedMatroid& om, int base) {
  std::vector<std::pair<int, int>> sig{{base, 1}};
  Mask b = bit(base);
  for (int e = 0; e < om.size() && popcount(b) < om.rank(); ++e) {
    if (contains(b, e) || !om.underlying().is_independent(b | bit(e))) continue;
    b |= bit(e);
    sig.emplace_back(e, -1);
  }
  return sig;
}

std::vector<std::pair<int, int>> random_signature(const OrientedMatroid& om, int base, std::mt19937_64& rng) {
  std::vector<int> order;
  for (int e = 0; e < om.size(); ++e)
    if (e != base) order.push_back(e);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> sig{{base, 1}};
  Mask b = bit(base);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int e : order) {
    if (popcount(b) == om.rank()) break;
    if (!om.underlying().is_independent(b | bit(e))) continue;
    b |= bit(e);
    sig.emplace_back(e, coin(rng) ? 1 : -1);
  }
  return sig;
}

bool is_general(const OrientedMatroid& om, const Extension& ext) {
  const Chirotope& chi = ext.extended.chirotope();
  bool ok = true;
  for_each_subset(om.size(), om.rank() - 1, [&](Mask h) {
    if (ok && om.underlying().is_independent(h) && chi.with_last(h, ext.new_position) == 0) ok = false;
  });
  return ok;
}

std::vector<SignVector> bounded_topes(const OrientedMatroid& om, int base) {
  std::vector<SignVector> out;
  for (const auto& p : om.topes()) {
    bool ok = p[base] > 0;
    for (const auto& y : om.cocircuits())
      if (ok && y.conforms_to(p) && y[base] <= 0) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<SignVector> bounded_topes_wrt_extension(const OrientedMatroid& om, const Extension& ext) {
  const int q = ext.new_position;
  const OrientedMatroid& big = ext.extended;
  std::vector<SignVector> out;
  for (const auto& p : om.topes()) {
    SignVector pq = p;
    pq.set(q, 1);
    if (!big.is_tope(pq)) continue;
    bool ok = true;
    for (const auto& y : big.cocircuits())
      if (ok && y.conforms_to(pq) && y[q] <= 0) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

SignVector fundamental_circuit(const Extension& ext, Mask basis) {
  const int q = ext.new_position;
  const SignVector c = circuit_from_set(ext.extended.chirotope(), basis | bit(q));
  if (c[q] == 0) throw Error("not a basis");
  return c[q] < 0 ? c : -c;
}

}  // namespace omc
