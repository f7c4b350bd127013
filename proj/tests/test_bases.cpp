#include "support.hpp"

#include "omcanon/bases.hpp"

#include <doctest.h>

#include <random>

using namespace omc;
using namespace omc::test;

namespace {

std::vector<OrientedMatroid> fixtures() {
  std::vector<OrientedMatroid> out{f1(), f2(), f2inf()};
  for (const auto& m : random_instances()) out.push_back(from_matrix(m));
  return out;
}

/// dim of the reduced algebra in degree j from the Whitney numbers:
/// the complex (OS, d) is exact, so it is an alternating partial sum.
int reduced_dim_oracle(const std::vector<std::int64_t>& w, int j) {
  std::int64_t s = 0;
  for (int i = 0; i <= j; ++i) {
    const std::int64_t wi = w[static_cast<std::size_t>(i)] < 0 ? -w[static_cast<std::size_t>(i)] : w[static_cast<std::size_t>(i)];
    s += ((j - i) & 1) ? -wi : wi;
  }
  return static_cast<int>(s);
}

std::vector<Rational> weights(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("bases") {

TEST_CASE("perturbing extension of F1") {
  const auto om = f1();
  int attempts = 0;
  const auto ext = perturbing_extension(om, 0, 0, &attempts);
  CHECK(attempts == 1);
  CHECK(ext.signature == default_signature(om, 0));
  CHECK(ext.signature.front() == std::pair<int, int>{0, 1});
}

TEST_CASE("T^q basis of F1") {
  CanonicalFormEngine engine;
  const auto om = f1();
  const auto a = engine.algebra(om);
  const auto basis = tq_basis(engine, om, perturbing_extension(om, 0, 0));
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].first == sv("+,+,+,-", 4));
  CHECK(basis[0].second == a->monomial({3}) - a->monomial({2}));
  CHECK(basis[1].first == sv("+,+,-,-", 4));
  CHECK(basis[1].second == a->monomial({2}) - a->monomial({1}));
  CHECK(basis[2].first == sv("+,-,-,-", 4));
  CHECK(basis[2].second == a->monomial({1}) - a->monomial({0}));
}

TEST_CASE("T^q bases on all fixtures") {
  CanonicalFormEngine engine;
  for (const auto& om : fixtures()) {
    const auto basis = tq_basis(engine, om, perturbing_extension(om, 0, 0));
    CHECK(static_cast<int>(basis.size()) == reduced_dim_oracle(dc_characteristic(om.chirotope()), om.rank() - 1));
  }
  const OrientedMatroid point(Chirotope(1, 1, {1}));
  const auto b = tq_basis(engine, point, perturbing_extension(point, 0, 0));
  REQUIRE(b.size() == 1);
  CHECK((b[0].second == engine.algebra(point)->one() || b[0].second == -engine.algebra(point)->one()));
}

TEST_CASE("simplex identity for every basis") {
  CanonicalFormEngine engine;
  for (const auto& om : {f1(), f2(), f2inf()}) {
    const auto ext = perturbing_extension(om, 0, 0);
    for (Mask b : om.underlying().bases()) {
      const auto check = simplex_identity_check(engine, om, ext, b);
      CAPTURE(b);
      CHECK(check.pass);
      CHECK(!check.topes.empty());
    }
  }
}

TEST_CASE("simplex identity on F1 by hand") {
  CanonicalFormEngine engine;
  const auto om = f1();
  const auto a = engine.algebra(om);
  const auto ext = perturbing_extension(om, 0, 0);
  const std::vector<SignVector> chain{sv("+,-,-,-", 4), sv("+,+,-,-", 4), sv("+,+,+,-", 4)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto check = simplex_identity_check(engine, om, ext, bit(i) | bit(j));
      CHECK(check.lhs == -(a->monomial({i}) - a->monomial({j})));
      OSElement sum = a->zero(1);
      for (int k = i; k < j; ++k) sum = sum + engine.tope_form(om, chain[static_cast<std::size_t>(k)]);
      CHECK(check.rhs == sum);
    }
}

TEST_CASE("Boolean simplex identity") {
  CanonicalFormEngine engine;
  const OrientedMatroid boolean(Chirotope(3, 3, {1}));
  const auto ext = perturbing_extension(boolean, 0, 0);
  const auto check = simplex_identity_check(engine, boolean, ext, 0b111);
  CHECK(check.topes.size() == 1);
  CHECK(check.pass);
}

TEST_CASE("flags") {
  const auto flag1 = build_flag(f1(), 0);
  REQUIRE(flag1.levels.size() == 2);
  CHECK(flag1.levels[0].om.rank() == 2);
  CHECK(flag1.levels[1].om.rank() == 1);
  const auto flag2 = build_flag(f2(), 0);
  REQUIRE(flag2.levels.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(flag2.levels[static_cast<std::size_t>(k)].om.rank() == 3 - k);
    CHECK(flag2.levels[static_cast<std::size_t>(k)].om.labels() == f2().labels());
    CHECK(is_general(flag2.levels[static_cast<std::size_t>(k)].om, flag2.levels[static_cast<std::size_t>(k)].ext));
  }
}

TEST_CASE("graded bases have the reduced dimensions") {
  CanonicalFormEngine engine;
  for (const auto& om : fixtures()) {
    const auto flag = build_flag(om, 0);
    const auto w = dc_characteristic(om.chirotope());
    for (int k = 1; k <= om.rank(); ++k) {
      CAPTURE(k);
      const auto basis = graded_basis(engine, flag, k);
      CHECK(static_cast<int>(basis.size()) == reduced_dim_oracle(w, om.rank() - k));
      for (const auto& [p, f] : basis) CHECK(f.grade == om.rank() - k);
    }
  }
  const auto f = f1();
  const auto top = graded_basis(engine, build_flag(f, 0), 2);
  REQUIRE(top.size() == 1);
  CHECK((top[0].second == engine.algebra(f)->one() || top[0].second == -engine.algebra(f)->one()));
  const OrientedMatroid boolean(Chirotope(2, 2, {1}));
  const auto bflag = build_flag(boolean, 0);
  CHECK(graded_basis(engine, bflag, 1).size() == 1);
  CHECK(graded_basis(engine, bflag, 2).size() == 1);
}

TEST_CASE("graded basis coordinates are integral") {
  CanonicalFormEngine engine;
  for (const auto& om : fixtures()) {
    const auto flag = build_flag(om, 0);
    const auto a = engine.algebra(om);
    for (int k = 1; k <= om.rank(); ++k)
      for (const auto& [p, f] : graded_basis(engine, flag, k)) CHECK(is_integral(f.coords));
  }
}

TEST_CASE("structure constants") {
  CanonicalFormEngine engine;
  const auto om = f2();
  const auto a = engine.algebra(om);
  const auto flag = build_flag(om, 0);
  const auto low = graded_basis(engine, flag, 2);
  const auto high = graded_basis(engine, flag, 1);
  std::vector<OSElement> target;
  for (const auto& [p, f] : high) target.push_back(f);
  for (const auto& [p, x] : low)
    for (const auto& [q, y] : low) {
      const Vector c = structure_constants(*a, x, y, target);
      CHECK(is_integral(c));
      OSElement back = a->zero(2);
      for (std::size_t i = 0; i < c.size(); ++i) back = back + c[i] * target[i];
      CHECK(back == a->wedge(x, y));
    }
  // F1: products of degree-1 reduced elements vanish
  const auto a1 = engine.algebra(f1());
  const OSElement u = a1->monomial({1}) - a1->monomial({0});
  const OSElement v = a1->monomial({2}) - a1->monomial({1});
  CHECK(a1->wedge(u, v).is_zero());
  CHECK_THROWS_AS(expand_in_basis(a1->monomial({0}), {u, v}), InvariantViolation);
}

TEST_CASE("Aomoto complex of F1") {
  CanonicalFormEngine engine;
  const auto om = f1();
  const auto ext = perturbing_extension(om, 0, 0);
  const auto generic = aomoto(engine, om, ext, weights({0, 1, 1, 1}), 0);
  CHECK(generic.dim_h == 2);
  CHECK(generic.beta == 2);
  CHECK(generic.is_generic);
  CHECK(generic.certificate);
  CHECK(generic.t0 == std::vector<SignVector>{sv("+,+,+,-", 4), sv("+,+,-,-", 4)});
  CHECK(generic.cohomology_dims == std::vector<int>{0, 2});
  const auto degenerate = aomoto(engine, om, ext, weights({0, 1, 1, -2}), 0);
  CHECK_FALSE(degenerate.is_generic);
}

TEST_CASE("Aomoto complex in rank one") {
  CanonicalFormEngine engine;
  const OrientedMatroid om(Chirotope(1, 2, {1, 1}));
  const auto rep = aomoto(engine, om, perturbing_extension(om, 0, 0), weights({0, 1}), 0);
  CHECK(rep.dim_h == rep.beta);
  CHECK(rep.t0.size() == 1);
}

TEST_CASE("bounded topes count beta") {
  for (const auto& om : fixtures())
    CHECK(static_cast<std::int64_t>(bounded_topes(om, 0).size()) == crapo_beta(om.chirotope()));
}

TEST_CASE("seeded random weights reach genericity") {
  CanonicalFormEngine engine;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (const auto& om : {f1(), f2(), f2inf()}) {
    const auto ext = perturbing_extension(om, 0, 0);
    bool found = false;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> w;
      for (int s = 0; s < om.size(); ++s) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        w.push_back(x);
      }
      const auto rep = aomoto(engine, om, ext, w, 0);
      CHECK(rep.is_generic == (rep.dim_h == rep.beta && rep.certificate));
      found = found || rep.is_generic;
    }
    CHECK(found);
  }
}

}  // TEST_SUITE
