#include "omcanon/canonical_forms.hpp"

namespace omc {

bool ResidueReport::all_pass() const {
  for (const auto& a : atoms)
    if (!a.pass) return false;
  return true;
}

std::shared_ptr<const OSAlgebra> CanonicalFormEngine::algebra(const Matroid& m) {
  auto key = std::make_pair(m.ids(), m.bases());
  if (auto it = algebras_.find(key); it != algebras_.end()) return it->second;
  auto a = std::make_shared<const OSAlgebra>(m);
  algebras_.emplace(std::move(key), a);
  return a;
}

OSElement CanonicalFormEngine::form(const OrientedMatroid& om) {
  const int r = om.rank();
  if (r < 1) throw Error("reduced canonical forms need rank at least 1");
  auto key = std::make_tuple(r, om.ids(), om.chirotope().values());
  if (auto it = forms_.find(key); it != forms_.end()) return it->second;

  const auto alg = algebra(om);
  OSElement result = alg->zero(r - 1);
  if (om.is_acyclic()) {
    if (r == 1) {
      result.coords[0] = om.chirotope().at(bit(0));
    } else {
      const auto& basis = alg->reduced_basis(r - 1);
      const Matrix b = columns_of(basis, alg->dim(r - 1));
      Matrix system(0, static_cast<int>(basis.size()));
      Vector rhs;
      const NbcIndex& nbc = alg->nbc();
      for (int a = 0; a < nbc.num_atoms(); ++a) {
        const OrientedMatroid minor = contract(om, nbc.representative(a));
        const auto target = algebra(minor);
        // the residue of d e_(B', a) is -d e_B', so the targets carry a sign
        const OSElement t = -form(minor);
        system = system.vstack(alg->residue_matrix(r - 1, a, *target) * b);
        rhs.insert(rhs.end(), t.coords.begin(), t.coords.end());
      }
      const auto c = solve(system, rhs);
      if (!c) throw InvariantViolation("residue system has no solution; is the chirotope valid?");
      if (rank(system) != static_cast<int>(basis.size()))
        throw InvariantViolation("residue system is not uniquely solvable");
      result.coords = b * *c;
    }
  }
  forms_.emplace(std::move(key), result);
  return result;
}

OSElement CanonicalFormEngine::tope_form(const OrientedMatroid& om, const SignVector& p) {
  if (!om.is_tope(p)) throw Error("not a tope: " + to_string(p, om.size()));
  return form(reorient(om, p));
}

OSElement CanonicalFormEngine::nonreduced(const OrientedMatroid& om, const SignVector& p) {
  if (!om.is_tope(p)) throw Error("not a tope: " + to_string(p, om.size()));
  const auto alg = algebra(om);
  if (om.rank() == 0) return Rational(om.chirotope().at(0)) * alg->one();
  return alg->inverse_boundary(tope_form(om, p));
}

OrientedMatroid CanonicalFormEngine::facet_minor(const OrientedMatroid& om, const SignVector& p, int position) {
  const OrientedMatroid minor = contract(om, position);
  return p[position] < 0 ? minor.negated() : minor;
}

ResidueReport CanonicalFormEngine::check_residue_axioms(const OrientedMatroid& om, const SignVector& p) {
  ResidueReport report;
  if (om.rank() < 2) return report;
  const auto alg = algebra(om);
  const OSElement omega = tope_form(om, p);
  const NbcIndex& nbc = alg->nbc();
  for (int a = 0; a < nbc.num_atoms(); ++a) {
    const int i = nbc.representative(a);
    const OrientedMatroid minor = contract(om, i);
    const auto target = algebra(minor);
    AtomResidueCheck check;
    check.atom = a;
    check.facet = is_facet(om, p, a);
    check.residue = alg->residue(omega, a, *target);
    if (check.facet) {
      const Mask keep = om.ground() & ~om.atoms()[static_cast<std::size_t>(a)];
      check.expected = -tope_form(facet_minor(om, p, i), pack(p, keep));
    } else {
      check.expected = target->zero(om.rank() - 2);
    }
    check.pass = check.residue == check.expected;
    report.atoms.push_back(std::move(check));
  }
  return report;
}

OSElement canonical_form_from_triangulation(const OSAlgebra& a, const Chirotope& chi, const std::vector<Mask>& bases) {
  return a.boundary(nonreduced_from_triangulation(a, chi, bases));
}

OSElement nonreduced_from_triangulation(const OSAlgebra& a, const Chirotope& chi, const std::vector<Mask>& bases) {
  OSElement x = a.zero(chi.rank());
  for (Mask b : bases) x = x + Rational(chi.at(b)) * a.monomial(bits_of(b));
  return x;
}

}  // namespace omc
