#include "cwl/moebius.hpp"

#include <deque>
#include <stdexcept>

namespace cwl {

MoebiusAlgebra::MoebiusAlgebra(const SubgroupLattice& L) : L_(&L) {
  const int n = L.size();
  // mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z); the canonical element
  // order is a linear extension of inclusion
  mu_.assign(n, std::vector<Int>(n, 0));
  for (int x = 0; x < n; ++x) {
    mu_[x][x] = 1;
    for (int y = x + 1; y < n; ++y) {
      if (!L.leq(x, y)) continue;
      Int acc = 0;
      for (int z = x; z < y; ++z)
        if (L.leq(x, z) && L.leq(z, y)) acc += mu_[x][z];
      mu_[x][y] = -acc;
    }
  }
}

QVec MoebiusAlgebra::zeta_transform(const QVec& e_coeffs) const {
  const int n = L_->size();
  QVec out(n, Rational(0));
  for (int mu = 0; mu < n; ++mu)
    for (int lam = 0; lam < n; ++lam)
      if (L_->leq(lam, mu)) out[mu] += e_coeffs[lam];
  for (auto& c : out) c.canonicalize();
  return out;
}

QVec MoebiusAlgebra::moebius_transform(const QVec& eps_coeffs) const {
  const int n = L_->size();
  QVec out(n, Rational(0));
  for (int lam = 0; lam < n; ++lam)
    for (int mu = 0; mu <= lam; ++mu)
      if (L_->leq(mu, lam)) out[lam] += Rational(mu_[mu][lam]) * eps_coeffs[mu];
  for (auto& c : out) c.canonicalize();
  return out;
}

QVec MoebiusAlgebra::primitive_idempotent(int x) const {
  const int n = L_->size();
  QVec out(n, Rational(0));
  for (int mu = x; mu < n; ++mu)
    if (L_->leq(x, mu)) out[mu] = Rational(mu_[x][mu]);
  return out;
}

QVec MoebiusAlgebra::mult_e_basis(const QVec& a, const QVec& b) const {
  const int n = L_->size();
  QVec out(n, Rational(0));
  for (int x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (int y = 0; y < n; ++y) {
      if (b[y] == 0) continue;
      out[L_->join(x, y)] += a[x] * b[y];
    }
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

QVec MoebiusAlgebra::mult_eps_basis(const QVec& a, const QVec& b) const {
  const int n = L_->size();
  QVec out(n, Rational(0));
  for (int x = 0; x < n; ++x) {
    out[x] = a[x] * b[x];
    out[x].canonicalize();
  }
  return out;
}

ThetaMap::ThetaMap(const SubgroupLattice& L) : L_(&L) {
  const CoxeterSystem& W = L.system();
  orbits_.resize(L.num_orbits());
  for (int o = 0; o < L.num_orbits(); ++o) {
    Orbit& ob = orbits_[o];
    ob.members = L.orbit_members(o);
    for (size_t i = 0; i < ob.members.size(); ++i)
      ob.member_pos.emplace(ob.members[i], static_cast<int>(i));
    const int rep = ob.members.front();

    // deterministic section: BFS from the representative over the generators
    ob.tau.assign(ob.members.size(), -1);
    ob.tau[0] = 0;
    std::deque<int> queue{rep};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int tx = ob.tau[ob.member_pos.at(x)];
      for (int s = 0; s < W.rank(); ++s) {
        int y = L.act_generator(s, x);
        int& ty = ob.tau[ob.member_pos.at(y)];
        if (ty < 0) {
          ty = W.mult(W.simple_element(s), tx);
          queue.push_back(y);
        }
      }
    }

    for (int w = 0; w < W.size(); ++w)
      if (L.act(w, rep) == rep) ob.stabilizer.push_back(w);
    for (size_t i = 0; i < ob.stabilizer.size(); ++i)
      ob.stab_pos.emplace(ob.stabilizer[i], static_cast<int>(i));

    auto w0 = subgroup_elements(W, L.subgroup(rep).reflections);
    ob.in_subgroup.assign(ob.stabilizer.size(), 0);
    for (int g : w0) {
      auto it = ob.stab_pos.find(g);
      if (it == ob.stab_pos.end())
        throw std::logic_error("subgroup element outside its own stabilizer");
      ob.in_subgroup[it->second] = 1;
    }
  }
}

ThetaMap::Value ThetaMap::zero() const {
  Value v;
  v.block.resize(orbits_.size());
  for (size_t o = 0; o < orbits_.size(); ++o) {
    const size_t nx = orbits_[o].members.size();
    const size_t ng = orbits_[o].stabilizer.size();
    v.block[o].assign(nx, std::vector<QVec>(nx, QVec(ng, Rational(0))));
  }
  return v;
}

void ThetaMap::add_single(Value& v, int orbit, int i, int j, int g, const Rational& c) const {
  int pos = orbits_[orbit].stab_pos.at(g);
  v.block[orbit][i][j][pos] += c;
  v.block[orbit][i][j][pos].canonicalize();
}

ThetaMap::Value ThetaMap::identity() const {
  Value v = zero();
  for (size_t o = 0; o < orbits_.size(); ++o)
    for (size_t i = 0; i < orbits_[o].members.size(); ++i)
      add_single(v, static_cast<int>(o), static_cast<int>(i), static_cast<int>(i), 0, Rational(1));
  return v;
}

ThetaMap::Value ThetaMap::theta_group_element(int w) const {
  const CoxeterSystem& W = L_->system();
  Value v = zero();
  for (size_t o = 0; o < orbits_.size(); ++o) {
    const Orbit& ob = orbits_[o];
    for (size_t j = 0; j < ob.members.size(); ++j) {
      int x = ob.members[j];
      int wx = L_->act(w, x);
      int i = ob.member_pos.at(wx);
      // tau(wx)^{-1} w tau(x)
      int g = W.mult(W.inv(ob.tau[i]), W.mult(w, ob.tau[j]));
      add_single(v, static_cast<int>(o), i, static_cast<int>(j), g, Rational(1));
    }
  }
  return v;
}

ThetaMap::Value ThetaMap::theta_idempotent(int x) const {
  Value v = zero();
  int o = L_->orbit_of(x);
  int i = orbits_[o].member_pos.at(x);
  add_single(v, o, i, i, 0, Rational(1));
  return v;
}

ThetaMap::Value ThetaMap::theta_w_e(int w, int L) const {
  const CoxeterSystem& W = L_->system();
  Value v = zero();
  for (int mu = 0; mu < L_->size(); ++mu) {
    if (!L_->leq(L, mu)) continue;  // e_L = sum of eps_mu over mu >= L
    int o = L_->orbit_of(mu);
    const Orbit& ob = orbits_[o];
    int j = ob.member_pos.at(mu);
    int wmu = L_->act(w, mu);
    int i = ob.member_pos.at(wmu);
    int g = W.mult(W.inv(ob.tau[i]), W.mult(w, ob.tau[j]));
    add_single(v, o, i, j, g, Rational(1));
  }
  return v;
}

ThetaMap::Value ThetaMap::multiply(const Value& a, const Value& b) const {
  const CoxeterSystem& W = L_->system();
  Value v = zero();
  for (size_t o = 0; o < orbits_.size(); ++o) {
    const Orbit& ob = orbits_[o];
    const size_t nx = ob.members.size();
    const size_t ng = ob.stabilizer.size();
    for (size_t i = 0; i < nx; ++i)
      for (size_t k = 0; k < nx; ++k)
        for (size_t j = 0; j < nx; ++j) {
          const QVec& p = a.block[o][i][k];
          const QVec& q = b.block[o][k][j];
          for (size_t g = 0; g < ng; ++g) {
            if (p[g] == 0) continue;
            for (size_t h = 0; h < ng; ++h) {
              if (q[h] == 0) continue;
              int gh = W.mult(ob.stabilizer[g], ob.stabilizer[h]);
              int pos = ob.stab_pos.at(gh);
              v.block[o][i][j][pos] += p[g] * q[h];
              v.block[o][i][j][pos].canonicalize();
            }
          }
        }
  }
  return v;
}

bool ThetaMap::equal(const Value& a, const Value& b) const {
  for (size_t o = 0; o < orbits_.size(); ++o)
    for (size_t i = 0; i < orbits_[o].members.size(); ++i)
      for (size_t j = 0; j < orbits_[o].members.size(); ++j)
        if (a.block[o][i][j] != b.block[o][i][j]) return false;
  return true;
}

Rational ThetaMap::block_trace(const Value& v) const {
  Rational acc(0);
  for (size_t o = 0; o < orbits_.size(); ++o) {
    const Orbit& ob = orbits_[o];
    for (size_t i = 0; i < ob.members.size(); ++i) {
      const QVec& diag = v.block[o][i][i];
      for (size_t g = 0; g < diag.size(); ++g) {
        if (diag[g] == 0) continue;
        if (!ob.in_subgroup[g]) continue;       // zero off the identity coset
        if (ob.stabilizer[g] != 0) continue;    // group trace at u = 1
        acc += diag[g];
      }
    }
  }
  acc.canonicalize();
  return acc;
}

long ThetaMap::total_dimension() const {
  long total = 0;
  for (const auto& ob : orbits_) {
    long nx = static_cast<long>(ob.members.size());
    total += nx * nx * static_cast<long>(ob.stabilizer.size());
  }
  return total;
}

IntMatrix ThetaMap::basis_matrix() const {
  const CoxeterSystem& W = L_->system();
  const long rows = static_cast<long>(W.size()) * L_->size();
  if (rows != total_dimension())
    throw std::logic_error("theta source and target dimensions differ");

  std::vector<long> offset(orbits_.size() + 1, 0);
  for (size_t o = 0; o < orbits_.size(); ++o) {
    long nx = static_cast<long>(orbits_[o].members.size());
    offset[o + 1] = offset[o] + nx * nx * static_cast<long>(orbits_[o].stabilizer.size());
  }

  IntMatrix m(rows, std::vector<Int>(rows, 0));
  for (int w = 0; w < W.size(); ++w)
    for (int lam = 0; lam < L_->size(); ++lam) {
      // theta(w eps_lam) = tau(w.lam)^{-1} w tau(lam) E_{w.lam, lam}
      int o = L_->orbit_of(lam);
      const Orbit& ob = orbits_[o];
      int j = ob.member_pos.at(lam);
      int i = ob.member_pos.at(L_->act(w, lam));
      int g = W.mult(W.inv(ob.tau[i]), W.mult(w, ob.tau[j]));
      const long nx = static_cast<long>(ob.members.size());
      const long ng = static_cast<long>(ob.stabilizer.size());
      long col = offset[o] + (i * nx + j) * ng + ob.stab_pos.at(g);
      m[static_cast<long>(w) * L_->size() + lam][col] = 1;
    }
  return m;
}

}  // namespace cwl
