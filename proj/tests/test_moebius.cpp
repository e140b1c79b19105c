#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "cwl/moebius.hpp"

using namespace cwl;

namespace {

QVec unit(int n, int i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

// independent Moebius recursion over the order relation only
Int mu_oracle(const SubgroupLattice& L, int x, int y) {
  if (x == y) return 1;
  if (!L.leq(x, y)) return 0;
  Int acc = 0;
  for (int z = 0; z < L.size(); ++z)
    if (z != y && L.leq(x, z) && L.leq(z, y)) acc += mu_oracle(L, x, z);
  return -acc;
}

}  // namespace

TEST_CASE("zeta and moebius transforms on the 2-chain") {
  auto A1 = CoxeterSystem::construct(CoxeterType::typeA(1));
  auto L = SubgroupLattice::enumerate_L_infinity(A1);
  REQUIRE(L.size() == 2);
  MoebiusAlgebra M(L);

  // e_0 -> eps_0 + eps_1, e_1 -> eps_1
  CHECK(M.zeta_transform(unit(2, 0)) == QVec{Rational(1), Rational(1)});
  CHECK(M.zeta_transform(unit(2, 1)) == QVec{Rational(0), Rational(1)});

  // eps_triv = e_triv - e_W, eps_W = e_W
  CHECK(M.primitive_idempotent(0) == QVec{Rational(1), Rational(-1)});
  CHECK(M.primitive_idempotent(1) == QVec{Rational(0), Rational(1)});
}

TEST_CASE("moebius function of the partition lattice of a 3-set") {
  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L = SubgroupLattice::enumerate_L_infinity(A2);
  REQUIRE(L.size() == 5);
  MoebiusAlgebra M(L);
  CHECK(M.moebius(L.bottom(), L.top()) == 2);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) CHECK(M.moebius(x, y) == mu_oracle(L, x, y));
}

TEST_CASE("transforms are mutually inverse algebra morphisms") {
  for (auto t : {CoxeterType::typeA(2), CoxeterType::typeB(2)}) {
    auto W = CoxeterSystem::construct(t);
    auto L = SubgroupLattice::enumerate_L_infinity(W);
    MoebiusAlgebra M(L);
    const int n = L.size();
    for (int i = 0; i < n; ++i) {
      CHECK(M.moebius_transform(M.zeta_transform(unit(n, i))) == unit(n, i));
      CHECK(M.zeta_transform(M.moebius_transform(unit(n, i))) == unit(n, i));
      for (int j = 0; j < n; ++j) {
        // morphism on basis pairs: zeta(e_i e_j) = zeta(e_i) zeta(e_j)
        QVec lhs = M.zeta_transform(M.mult_e_basis(unit(n, i), unit(n, j)));
        QVec rhs = M.mult_eps_basis(M.zeta_transform(unit(n, i)), M.zeta_transform(unit(n, j)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("primitive idempotents are orthogonal and sum to the unit") {
  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L = SubgroupLattice::enumerate_L_infinity(A2);
  MoebiusAlgebra M(L);
  const int n = L.size();
  QVec sum(n, Rational(0));
  for (int x = 0; x < n; ++x) {
    QVec ex = M.primitive_idempotent(x);
    for (int k = 0; k < n; ++k) sum[k] += ex[k];
    for (int y = 0; y < n; ++y) {
      QVec prod = M.mult_e_basis(ex, M.primitive_idempotent(y));
      CHECK(prod == (x == y ? ex : QVec(n, Rational(0))));
    }
  }
  CHECK(sum == unit(n, L.bottom()));  // sum of all eps = e_trivial
}

TEST_CASE("theta on A2: explicit block shapes") {
  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L = SubgroupLattice::enumerate_L_infinity(A2);
  ThetaMap theta(L);

  REQUIRE(theta.num_orbits() == 3);
  // hyperplane orbit: |X| = 3 with stabilizer of order 2
  int hyper = L.orbit_of(L.rank1_element(0));
  CHECK(theta.orbit(hyper).members.size() == 3);
  CHECK(theta.orbit(hyper).stabilizer.size() == 2);

  CHECK(theta.equal(theta.theta_group_element(0), theta.identity()));

  int rep = theta.orbit(hyper).members.front();
  auto v = theta.theta_idempotent(rep);
  for (int o = 0; o < theta.num_orbits(); ++o)
    for (size_t i = 0; i < theta.orbit(o).members.size(); ++i)
      for (size_t j = 0; j < theta.orbit(o).members.size(); ++j)
        for (size_t g = 0; g < theta.orbit(o).stabilizer.size(); ++g) {
          Rational want = (o == hyper && i == 0 && j == 0 &&
                           theta.orbit(o).stabilizer[g] == 0)
                              ? Rational(1)
                              : Rational(0);
          CHECK(v.block[o][i][j][g] == want);
        }

  // theta of a simple reflection restricted to the hyperplane orbit is a
  // monomial matrix: one entry per row and column
  auto ts = theta.theta_group_element(A2.simple_element(0));
  const auto& blk = ts.block[hyper];
  for (size_t i = 0; i < 3; ++i) {
    int row_hits = 0, col_hits = 0;
    for (size_t j = 0; j < 3; ++j) {
      int rh = 0, ch = 0;
      for (size_t g = 0; g < 2; ++g) {
        if (blk[i][j][g] != 0) ++rh;
        if (blk[j][i][g] != 0) ++ch;
      }
      CHECK(rh <= 1);
      row_hits += rh;
      col_hits += ch;
    }
    CHECK(row_hits == 1);
    CHECK(col_hits == 1);
  }
}

TEST_CASE("theta is multiplicative and bijective") {
  for (auto t : {CoxeterType::typeA(2), CoxeterType::typeB(2), CoxeterType::dihedral(6)}) {
    auto W = CoxeterSystem::construct(t);
    auto L = SubgroupLattice::enumerate_L_infinity(W);
    ThetaMap theta(L);
    CHECK(theta.total_dimension() == static_cast<long>(W.size()) * L.size());
    for (int g = 0; g < W.size(); ++g)
      for (int h = 0; h < W.size(); ++h)
        CHECK(theta.equal(theta.multiply(theta.theta_group_element(g), theta.theta_group_element(h)),
                          theta.theta_group_element(W.mult(g, h))));
    Int d = det_int(theta.basis_matrix());
    CHECK(d != 0);
  }
}

TEST_CASE("theta on semidirect basis elements") {
  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L = SubgroupLattice::enumerate_L_infinity(A2);
  ThetaMap theta(L);
  MoebiusAlgebra M(L);
  // (w eps_a)(v eps_b) = delta_{v^{-1}(a), b} wv eps_b
  for (int w = 0; w < A2.size(); ++w)
    for (int a = 0; a < L.size(); ++a)
      for (int v = 0; v < A2.size(); ++v)
        for (int b = 0; b < L.size(); ++b) {
          auto lhs = theta.multiply(
              theta.multiply(theta.theta_group_element(w), theta.theta_idempotent(a)),
              theta.multiply(theta.theta_group_element(v), theta.theta_idempotent(b)));
          auto rhs = theta.zero();
          if (L.act(A2.inv(v), a) == b)
            rhs = theta.multiply(theta.theta_group_element(A2.mult(w, v)),
                                 theta.theta_idempotent(b));
          CHECK(theta.equal(lhs, rhs));
        }
}

TEST_CASE("block trace at u = 1") {
  auto A1 = CoxeterSystem::construct(CoxeterType::typeA(1));
  auto L1 = SubgroupLattice::enumerate_L_infinity(A1);
  ThetaMap th1(L1);
  // basis order (1,triv), (1,W), (s,triv), (s,W): values 2, 1, 0, 0
  CHECK(th1.block_trace(th1.theta_w_e(0, 0)) == Rational(2));
  CHECK(th1.block_trace(th1.theta_w_e(0, 1)) == Rational(1));
  CHECK(th1.block_trace(th1.theta_w_e(1, 0)) == Rational(0));
  CHECK(th1.block_trace(th1.theta_w_e(1, 1)) == Rational(0));

  auto A2 = CoxeterSystem::construct(CoxeterType::typeA(2));
  auto L = SubgroupLattice::enumerate_L_infinity(A2);
  ThetaMap theta(L);
  for (int t = 0; t < A2.num_reflections(); ++t) {
    int x = L.rank1_element(t);
    CHECK(theta.block_trace(theta.theta_w_e(0, x)) == Rational(L.count_supersets(x)));
    CHECK(L.count_supersets(x) == 2);
  }
  for (int w = 1; w < A2.size(); ++w)
    for (int x = 0; x < L.size(); ++x)
      CHECK(theta.block_trace(theta.theta_w_e(w, x)) == Rational(0));
}
