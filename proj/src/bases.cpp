#include "omcanon/bases.hpp"

#include <algorithm>
#include <random>

namespace omc {

namespace {

bool contains_all(const std::vector<SignVector>& big, const std::vector<SignVector>& small) {
  return std::all_of(small.begin(), small.end(),
                     [&](const SignVector& x) { return std::find(big.begin(), big.end(), x) != big.end(); });
}

void require_basis(const std::vector<OSElement>& elems, int dim, int expected, const char* what) {
  const int got = elems.empty() ? 0 : rank(columns_of(elems, dim));
  if (got != expected || static_cast<int>(elems.size()) != expected)
    throw InvariantViolation(std::string(what) + ": " + std::to_string(elems.size()) + " forms of rank " +
                             std::to_string(got) + ", expected " + std::to_string(expected));
}

std::vector<SignVector> sorted_output(std::vector<SignVector> v, int n) {
  std::sort(v.begin(), v.end(), [n](const SignVector& a, const SignVector& b) { return output_less(a, b, n); });
  return v;
}

}  // namespace

Extension perturbing_extension(const OrientedMatroid& om, int base, std::uint64_t seed, int* attempts) {
  const auto t0 = bounded_topes(om, base);
  Extension ext = lex_extension(om, default_signature(om, base));
  int tries = 1;
  std::mt19937_64 rng(seed);
  while (!contains_all(bounded_topes_wrt_extension(om, ext), t0)) {
    if (tries == 32) throw Error("no extension perturbing the base was found after 32 signatures");
    ext = lex_extension(om, random_signature(om, base, rng));
    ++tries;
  }
  if (attempts) *attempts = tries;
  return ext;
}

Flag build_flag(const OrientedMatroid& om, std::uint64_t seed, int base) {
  if (om.rank() < 1) throw Error("flags need rank at least 1");
  Flag flag;
  flag.base = base;
  Extension first = perturbing_extension(om, base, seed, &flag.attempts);
  flag.levels.push_back({om, std::move(first)});
  for (int k = 1; k < om.rank(); ++k) {
    const FlagLevel& prev = flag.levels.back();
    OrientedMatroid next = contract(prev.ext.extended, prev.ext.new_position);
    if (next.size() != om.size()) throw InvariantViolation("truncation lost elements");
    Extension ext = lex_extension(next, default_signature(next, base));
    flag.levels.push_back({std::move(next), std::move(ext)});
  }
  return flag;
}

FormList tq_basis(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext) {
  FormList out;
  for (const auto& p : sorted_output(bounded_topes_wrt_extension(om, ext), om.size()))
    out.emplace_back(p, engine.tope_form(om, p));
  const auto alg = engine.algebra(om);
  std::vector<OSElement> forms;
  for (const auto& [p, f] : out) forms.push_back(f);
  require_basis(forms, alg->dim(om.rank() - 1), alg->reduced_dim(om.rank() - 1), "T^q forms");
  return out;
}

SimplexCheck simplex_identity_check(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext,
                                    Mask basis) {
  SimplexCheck out;
  out.basis = basis;
  out.circuit = fundamental_circuit(ext, basis);
  const auto alg = engine.algebra(om);
  const int sign = ((popcount(out.circuit.neg) - 1) & 1) ? -1 : 1;
  out.lhs = Rational(sign * om.chirotope().at(basis)) * alg->boundary(alg->monomial(bits_of(basis)));
  out.rhs = alg->zero(om.rank() - 1);
  const SignVector c = out.circuit.restricted(basis);
  for (const auto& p : om.sorted_topes()) {
    if (p.restricted(basis) != c) continue;
    out.topes.push_back(p);
    out.rhs = out.rhs + engine.tope_form(om, p);
  }
  out.pass = out.lhs == out.rhs;
  return out;
}

FormList graded_basis(CanonicalFormEngine& engine, const Flag& flag, int k) {
  const OrientedMatroid& m = flag.levels.front().om;
  const int r = m.rank();
  if (k < 1 || k > r) throw Error("graded basis degree out of range");
  const FlagLevel& level = flag.levels[static_cast<std::size_t>(k - 1)];
  const auto alg = engine.algebra(m);
  const auto local = engine.algebra(level.om);
  FormList out;
  for (const auto& p : sorted_output(bounded_topes_wrt_extension(level.om, level.ext), m.size())) {
    const OSElement f = engine.tope_form(level.om, p);
    if (k == 1) {
      out.emplace_back(p, f);
    } else {
      const OSElement lift = local->inverse_boundary(f);
      out.emplace_back(p, alg->boundary(alg->include(lift, *local)));
    }
  }
  std::vector<OSElement> forms;
  for (const auto& [p, f] : out) forms.push_back(f);
  require_basis(forms, alg->dim(r - k), alg->reduced_dim(r - k), "graded basis");
  return out;
}

Vector expand_in_basis(const OSElement& x, const std::vector<OSElement>& basis) {
  if (basis.empty()) {
    if (!x.is_zero()) throw InvariantViolation("element outside the span of an empty basis");
    return {};
  }
  const auto c = coordinates(x, basis);
  if (!c) throw InvariantViolation("element outside the span of the basis");
  return *c;
}

Vector structure_constants(const OSAlgebra& a, const OSElement& left, const OSElement& right,
                           const std::vector<OSElement>& target) {
  return expand_in_basis(a.wedge(left, right), target);
}

AomotoReport aomoto(CanonicalFormEngine& engine, const OrientedMatroid& om, const Extension& ext,
                    const std::vector<Rational>& weights, int base) {
  const int r = om.rank();
  const int n = om.size();
  if (static_cast<int>(weights.size()) != n) throw Error("one weight per element expected");
  const auto alg = engine.algebra(om);
  AomotoReport rep;

  OSElement omega = alg->zero(1);
  for (int s = 0; s < n; ++s) {
    if (s == base || sgn(weights[static_cast<std::size_t>(s)]) == 0) continue;
    omega = omega + weights[static_cast<std::size_t>(s)] * (alg->monomial({s}) - alg->monomial({base}));
  }
  if (r >= 2 && !alg->boundary(omega).is_zero()) throw InvariantViolation("omega is not reduced");

  // rank of omega^ : dOS^k -> dOS^{k+1}
  std::vector<int> ranks(static_cast<std::size_t>(r), 0);
  for (int k = 0; k + 1 < r; ++k) {
    std::vector<OSElement> images;
    for (const auto& b : alg->reduced_basis(k)) images.push_back(alg->wedge(omega, b));
    ranks[static_cast<std::size_t>(k)] = images.empty() ? 0 : rank(columns_of(images, alg->dim(k + 1)));
  }
  for (int k = 0; k < r; ++k) {
    const int kernel = alg->reduced_dim(k) - ranks[static_cast<std::size_t>(k)];
    rep.cohomology_dims.push_back(kernel - (k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0));
  }
  rep.reduced_top_dim = alg->reduced_dim(r - 1);
  rep.image_rank = r >= 2 ? ranks[static_cast<std::size_t>(r - 2)] : 0;
  rep.dim_h = rep.reduced_top_dim - rep.image_rank;
  rep.beta = beta(om.underlying());

  rep.t0 = sorted_output(bounded_topes(om, base), n);
  rep.tq = sorted_output(bounded_topes_wrt_extension(om, ext), n);
  if (!contains_all(rep.tq, rep.t0)) throw Error("T^0 is not contained in T^q for this extension");
  for (const auto& p : rep.t0) rep.basis_images.push_back(engine.tope_form(om, p));

  if (rep.dim_h == rep.beta) {
    const int d = alg->dim(r - 1);
    std::vector<OSElement> images;
    if (r >= 2)
      for (const auto& b : alg->reduced_basis(r - 2)) images.push_back(alg->wedge(omega, b));
    std::vector<OSElement> all = images;
    all.insert(all.end(), rep.basis_images.begin(), rep.basis_images.end());
    const bool spans = (all.empty() ? 0 : rank(columns_of(all, d))) == rep.reduced_top_dim;

    // W-coordinates of the image in the T^q basis must have full rank |W|
    std::vector<OSElement> tq_forms;
    std::vector<bool> in_w;
    for (const auto& p : rep.tq) {
      tq_forms.push_back(engine.tope_form(om, p));
      in_w.push_back(std::find(rep.t0.begin(), rep.t0.end(), p) == rep.t0.end());
    }
    std::vector<Vector> w_rows;
    for (const auto& img : images) {
      const Vector c = expand_in_basis(img, tq_forms);
      Vector w;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (in_w[i]) w.push_back(c[i]);
      w_rows.push_back(std::move(w));
    }
    const int w_size = static_cast<int>(std::count(in_w.begin(), in_w.end(), true));
    const int w_rank = w_rows.empty() ? 0 : rank(Matrix::from_columns(w_rows, w_size));
    rep.certificate = spans && w_rank == w_size && static_cast<std::int64_t>(rep.t0.size()) == rep.dim_h;
  }
  rep.is_generic = rep.dim_h == rep.beta && rep.certificate;
  return rep;
}

}  // namespace omc
