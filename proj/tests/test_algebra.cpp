#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cwl/algebra.hpp"

using namespace cwl;

namespace {

struct Fixture {
  CoxeterSystem W;
  SubgroupLattice L;
  LatticeHeckeAlgebra A;
  explicit Fixture(const CoxeterType& t,
                   LatticeHeckeAlgebra::RuleVariant v = LatticeHeckeAlgebra::RuleVariant::exact)
      : W(CoxeterSystem::construct(t)),
        L(SubgroupLattice::enumerate_L_infinity(W)),
        A(W, L, v) {}
};

}  // namespace

TEST_CASE("mult_e on A1") {
  Fixture f(CoxeterType::typeA(1));
  // lattice: 0 = trivial, 1 = W = <s>; elements: 0 = 1, 1 = s
  AlgElem gs = f.A.basis_elem(1, 0);
  CHECK(f.A.mult_e(0, gs) == gs);                       // trivial idempotent is the unit
  CHECK(f.A.mult_e(1, gs) == f.A.basis_elem(1, 1));     // <s> conjugates to itself
  CHECK(f.A.mult_e(1, f.A.basis_elem(0, 0)) == f.A.basis_elem(0, 1));
}

TEST_CASE("mult_g on A1: frozen descent expansions") {
  Fixture f(CoxeterType::typeA(1));
  LaurentPoly one = LaurentPoly::constant(1, 1);
  LaurentPoly u = LaurentPoly::variable(1, 0);
  LaurentPoly um1 = u - one;

  CHECK(f.A.mult_g(0, f.A.one()) == f.A.basis_elem(1, 0));  // ascent from the identity

  // g_s (g_s e_triv) = e_triv + (u-1) e_W + (u-1) g_s e_W
  AlgElem lhs = f.A.mult_g(0, f.A.basis_elem(1, 0));
  AlgElem want;
  want.add(0, 0, one);
  want.add(0, 1, um1);
  want.add(1, 1, um1);
  CHECK(lhs == want);

  // g_s (g_s e_W) = u e_W + (u-1) g_s e_W
  AlgElem lhs2 = f.A.mult_g(0, f.A.basis_elem(1, 1));
  AlgElem want2;
  want2.add(0, 1, u);
  want2.add(1, 1, um1);
  CHECK(lhs2 == want2);

  // multiply reproduces the same expansion
  CHECK(f.A.multiply(f.A.basis_elem(1, 0), f.A.basis_elem(1, 0)) == want);
}

TEST_CASE("multiplication unit and u = 1 specialization") {
  Fixture f(CoxeterType::typeA(2));
  for (int w = 0; w < f.W.size(); ++w)
    for (int x = 0; x < f.L.size(); ++x) {
      AlgElem b = f.A.basis_elem(w, x);
      CHECK(f.A.multiply(f.A.one(), b) == b);
      CHECK(f.A.multiply(b, f.A.one()) == b);
    }
  // at u -> 1 every structure constant is the semidirect-product law
  for (int w = 0; w < f.W.size(); ++w)
    for (int x = 0; x < f.L.size(); ++x)
      for (int v = 0; v < f.W.size(); ++v)
        for (int y = 0; y < f.L.size(); ++y) {
          auto got = specialize_u1(f.A.multiply(f.A.basis_elem(w, x), f.A.basis_elem(v, y)));
          REQUIRE(got.size() == 1);
          CHECK(got.begin()->first == f.A.semidirect_product(w, x, v, y));
          CHECK(got.begin()->second == Rational(1));
        }
}

TEST_CASE("verify_relations passes on exact rules") {
  for (auto t : {CoxeterType::typeA(1), CoxeterType::typeA(2), CoxeterType::typeB(2)}) {
    Fixture f(t);
    auto rep = f.A.verify_relations();
    CHECK(rep.all_pass());
    for (const auto& e : rep.entries)
      if (e.relation != "braid" || f.W.rank() > 1) CHECK(e.checked > 0);
  }
}

TEST_CASE("corrupted descent rule is caught with a witness") {
  for (auto t : {CoxeterType::typeA(1), CoxeterType::typeA(2)}) {
    Fixture f(t, LatticeHeckeAlgebra::RuleVariant::drop_conjugate_join);
    auto rep = f.A.verify_relations();
    CHECK_FALSE(rep.all_pass());
    bool quad_failed = false;
    for (const auto& e : rep.entries)
      if (e.relation == "quadratic" && !e.pass) {
        quad_failed = true;
        CHECK_FALSE(e.witness.empty());
      }
    CHECK(quad_failed);
  }
}

TEST_CASE("projection to the Hecke algebra and its splitting") {
  Fixture f(CoxeterType::typeA(2));
  const int top = f.L.top();

  for (int w = 0; w < f.W.size(); ++w)
    for (int x = 0; x < f.L.size(); ++x) {
      HeckeElem h = f.A.project_to_hecke(f.A.basis_elem(w, x));
      CHECK(h == f.A.hecke_T(w));
    }

  // split(T_1) = e_W is an idempotent
  AlgElem eW = f.A.split_from_hecke(f.A.hecke_T(0));
  CHECK(eW == f.A.basis_elem(0, top));
  CHECK(f.A.multiply(eW, eW) == eW);

  // classical quadratic relation through the split corner
  HeckeElem TsTs = f.A.hecke_multiply(f.A.hecke_T(f.W.simple_element(0)),
                                      f.A.hecke_T(f.W.simple_element(0)));
  HeckeElem expect;
  expect.add(f.W.simple_element(0), f.A.u_of_simple(0) - LaurentPoly::constant(1, 1));
  expect.add(0, f.A.u_of_simple(0));
  CHECK(TsTs == expect);
  CHECK(f.A.project_to_hecke(f.A.split_from_hecke(TsTs)) == TsTs);

  // project is an algebra morphism onto the classical Hecke algebra, and
  // split is multiplicative into the corner at e_W
  for (int w = 0; w < f.W.size(); ++w)
    for (int x = 0; x < f.L.size(); ++x)
      for (int v = 0; v < f.W.size(); ++v)
        for (int y = 0; y < f.L.size(); ++y) {
          AlgElem a = f.A.basis_elem(w, x), b = f.A.basis_elem(v, y);
          CHECK(f.A.project_to_hecke(f.A.multiply(a, b)) ==
                f.A.hecke_multiply(f.A.project_to_hecke(a), f.A.project_to_hecke(b)));
        }
  for (int w = 0; w < f.W.size(); ++w)
    for (int v = 0; v < f.W.size(); ++v) {
      HeckeElem hw = f.A.hecke_T(w), hv = f.A.hecke_T(v);
      CHECK(f.A.split_from_hecke(f.A.hecke_multiply(hw, hv)) ==
            f.A.multiply(f.A.split_from_hecke(hw), f.A.split_from_hecke(hv)));
      CHECK(f.A.project_to_hecke(f.A.split_from_hecke(hw)) == hw);
    }
}

TEST_CASE("Peirce corners") {
  Fixture f1(CoxeterType::typeA(1));
  CHECK(f1.A.peirce_dimension(f1.L.top(), f1.L.top()) == 2);
  CHECK(f1.A.peirce_dimension(f1.L.top(), f1.L.bottom()) == 0);

  for (auto t : {CoxeterType::typeA(2), CoxeterType::typeB(2)}) {
    Fixture f(t);
    long total = 0;
    for (int x = 0; x < f.L.size(); ++x)
      for (int y = 0; y < f.L.size(); ++y) {
        int d = f.A.peirce_dimension(x, y);
        int want = f.L.orbit_of(x) == f.L.orbit_of(y)
                       ? static_cast<int>(f.L.stabilizer_order(f.L.orbit_of(x)))
                       : 0;
        CHECK(d == want);
        total += d;
      }
    CHECK(total == f.A.dimension());
  }
}

TEST_CASE("Peirce orthogonality and corner closure") {
  Fixture f(CoxeterType::typeA(2));
  // orthogonality across distinct middle idempotents
  int x = f.L.bottom();
  for (int y = 0; y < f.L.size(); ++y)
    for (int yp = 0; yp < f.L.size(); ++yp) {
      if (y == yp) continue;
      auto left = f.A.peirce_basis(x, y);
      auto right = f.A.peirce_basis(yp, x);
      for (const auto& a : left)
        for (const auto& b : right) CHECK(f.A.multiply(a, b).is_zero());
    }

  // each diagonal corner is closed under multiplication with unit eps_x
  for (int o = 0; o < f.L.num_orbits(); ++o) {
    int rep = f.L.orbit_rep(o);
    AlgElem ex = f.A.idempotent(rep);
    auto corner = f.A.peirce_basis(rep, rep);
    CHECK(static_cast<long>(corner.size()) == f.L.stabilizer_order(o));
    for (const auto& p : corner) {
      CHECK(f.A.multiply(ex, p) == p);
      CHECK(f.A.multiply(p, ex) == p);
      for (const auto& q : corner) {
        AlgElem prod = f.A.multiply(p, q);
        CHECK(f.A.multiply(f.A.multiply(ex, prod), ex) == prod);
      }
    }
  }
}

TEST_CASE("block dimension tables") {
  Fixture f1(CoxeterType::typeA(1));
  auto rep1 = f1.A.block_dimension_report();
  CHECK(rep1.total == 4);
  CHECK(rep1.total == rep1.expected);

  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L2 = SubgroupLattice::enumerate_L_2(A2);
  LatticeHeckeAlgebra alg2(A2, L2);
  auto rep2 = alg2.block_dimension_report();
  CHECK(rep2.total == 30);
  std::multiset<long> contribs;
  for (const auto& r : rep2.rows) contribs.insert(r.contribution);
  CHECK(contribs == std::multiset<long>{6, 6, 18});

  auto A3 = CoxeterSystem::construct(CoxeterType::typeA(3));
  auto L3 = SubgroupLattice::enumerate_L_infinity(A3);
  LatticeHeckeAlgebra alg3(A3, L3);
  CHECK(alg3.block_dimension_report().total == 360);
  CHECK(alg3.dimension() == 360);
}

TEST_CASE("Matsumoto independence on A2") {
  Fixture f(CoxeterType::typeA(2));
  for (int v = 0; v < f.W.size(); ++v) {
    auto words = f.W.all_reduced_words(v);
    for (int w = 0; w < f.W.size(); ++w)
      for (int M = 0; M < f.L.size(); ++M) {
        AlgElem b = f.A.basis_elem(w, M);
        AlgElem first = f.A.multiply_basis_with_word(words[0], f.L.bottom(), b);
        for (size_t k = 1; k < words.size(); ++k)
          CHECK(f.A.multiply_basis_with_word(words[k], f.L.bottom(), b) == first);
      }
  }
}

TEST_CASE("associativity") {
  Fixture f1(CoxeterType::typeA(1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        AlgElem a = f1.A.basis_elem(i / 2, i % 2);
        AlgElem b = f1.A.basis_elem(j / 2, j % 2);
        AlgElem c = f1.A.basis_elem(k / 2, k % 2);
        CHECK(f1.A.multiply(f1.A.multiply(a, b), c) == f1.A.multiply(a, f1.A.multiply(b, c)));
      }

  Fixture f(CoxeterType::typeB(2));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto pick = [&] {
      return f.A.basis_elem(static_cast<int>(rng() % f.W.size()),
                            static_cast<int>(rng() % f.L.size()));
    };
    AlgElem a = pick(), b = pick(), c = pick();
    CHECK(f.A.multiply(f.A.multiply(a, b), c) == f.A.multiply(a, f.A.multiply(b, c)));
  }
}
