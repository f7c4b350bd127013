#include "support.hpp"

#include <doctest.h>

using namespace omc;
using namespace omc::test;

namespace {

std::vector<OrientedMatroid> fixtures() {
  std::vector<OrientedMatroid> out{f1(), f2(), f2inf()};
  for (const auto& m : random_instances()) out.push_back(from_matrix(m));
  return out;
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("closure, rank and hyperplanes") {
  const auto m = f1().underlying();
  CHECK(m.closure(bit(1)) == bit(1));
  CHECK(m.rank(0b1110) == 2);
  CHECK(m.hyperplanes() == std::vector<Mask>{0b0001, 0b0010, 0b0100, 0b1000});
  CHECK(m.atoms().size() == 4);

  const auto m2 = f2().underlying();
  CHECK(m2.rank(0b00101) == 2);

  const auto point = OrientedMatroid(Chirotope(1, 1, {1})).underlying();
  CHECK(point.closure(0) == 0);
  CHECK(point.rank(point.ground()) == 1);
}

TEST_CASE("rank agrees with the chirotope") {
  for (const auto& om : fixtures())
    for (Mask s = 0; s < bit(om.size()); ++s) CHECK(om.underlying().rank(s) == chi_rank(om.chirotope(), s));
}

TEST_CASE("parallel elements share an atom") {
  const OrientedMatroid om(Chirotope(1, 3, {1, -1, 1}));
  CHECK(om.atoms() == std::vector<Mask>{0b111});
  // three points, two of them parallel, in rank 2
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(0, 2) = 2;
  const auto par = from_matrix(m).underlying();
  CHECK(par.atoms() == std::vector<Mask>{0b101, 0b010});
}

TEST_CASE("NBC sets") {
  const auto m = f1().underlying();
  const NbcIndex nbc(m);
  CHECK(nbc.sets(2) == std::vector<Mask>{0b0011, 0b0101, 0b1001});
  CHECK(nbc.sets(0) == std::vector<Mask>{0});
  for (const auto& om : fixtures()) {
    const NbcIndex idx(om.underlying());
    for (int k = 0; k <= om.rank(); ++k)
      for (Mask s : idx.sets(k)) {
        CHECK(idx.is_independent(s));
        for (Mask b : idx.broken_circuits()) CHECK((b & ~s) != 0);
      }
  }
}

TEST_CASE("NBC counts equal Whitney numbers from deletion-contraction") {
  for (const auto& om : fixtures()) {
    const NbcIndex idx(om.underlying());
    const auto w = dc_characteristic(om.chirotope());
    CHECK(whitney_numbers(om.underlying()) == w);
    for (int k = 0; k <= om.rank(); ++k)
      CHECK(static_cast<std::int64_t>(idx.sets(k).size()) == magnitude(w[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("Tutte polynomial against the subset expansion") {
  for (const auto& om : fixtures()) CHECK(tutte(om.underlying()) == subset_tutte(om.chirotope()));
  const Polynomial u24{{{2, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 2}, {{0, 2}, 1}};
  CHECK(tutte(f1().underlying()) == u24);
}

TEST_CASE("beta invariant") {
  CHECK(beta(f1().underlying()) == 2);
  for (int r = 2; r <= 4; ++r) {
    const OrientedMatroid boolean(Chirotope::tabulate(r, r, [](Mask) { return 1; }));
    CHECK(beta(boolean.underlying()) == 0);
  }
  for (const auto& om : fixtures()) CHECK(beta(om.underlying()) == crapo_beta(om.chirotope()));
  CHECK(beta(f2inf().underlying()) == static_cast<std::int64_t>(bounded_topes(f2inf(), 0).size()));
}

TEST_CASE("beta satisfies deletion-contraction") {
  for (const auto& om : fixtures()) {
    const int e = om.size() - 1;
    const auto& m = om.underlying();
    if (m.is_coloop(e) || popcount(m.atoms()[static_cast<std::size_t>(m.atom_of(e))]) > 1) continue;
    const Matroid del = m.restriction(m.ground() & ~bit(e));
    const Matroid con = m.contraction(bit(e));
    CHECK(beta(m) == beta(del) + beta(con));
  }
}

TEST_CASE("restriction and contraction keep ids") {
  const auto m = f2().underlying();
  const auto r = m.restriction(0b10110);
  CHECK(r.ids() == std::vector<int>{1, 2, 4});
  CHECK(r.rank() == 3);
  const auto c = m.contraction(bit(0));
  CHECK(c.ids() == std::vector<int>{1, 2, 3, 4});
  CHECK(c.rank() == 2);
  CHECK(c.position_of(3) == 2);
}

}  // TEST_SUITE
