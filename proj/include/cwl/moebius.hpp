#pragma once

#include <unordered_map>
#include <vector>

#include "cwl/laurent.hpp"
#include "cwl/subgroups.hpp"

namespace cwl {

// Coefficient vector over the elements of a lattice.
using QVec = std::vector<Rational>;

/// The Moebius algebra kL on the e-basis (e_x e_y = e_{x v y}) together with
/// its function-algebra realization on the orthogonal idempotents eps_x.
class MoebiusAlgebra {
public:
  explicit MoebiusAlgebra(const SubgroupLattice& L);

  const SubgroupLattice& lattice() const { return *L_; }
  const Int& moebius(int x, int y) const { return mu_[x][y]; }

  // e_x -> sum_{x <= y} eps_y, extended linearly; and its inverse
  QVec zeta_transform(const QVec& e_coeffs) const;
  QVec moebius_transform(const QVec& eps_coeffs) const;

  // eps_x expanded in the e-basis; integer coefficients
  QVec primitive_idempotent(int x) const;

  QVec mult_e_basis(const QVec& a, const QVec& b) const;
  QVec mult_eps_basis(const QVec& a, const QVec& b) const;

private:
  const SubgroupLattice* L_;
  std::vector<std::vector<Int>> mu_;
};

/// The explicit group-level isomorphism QW x| Q^L -> (+)_X Mat_X(Q G_{x_*}),
/// with deterministic BFS sections tau and stabilizers G_{x_*} enumerated
/// from the group. This is the u -> 1 layer.
class ThetaMap {
public:
  explicit ThetaMap(const SubgroupLattice& L);

  struct Orbit {
    std::vector<int> members;       // lattice indices, rep = members.front()
    std::vector<int> tau;           // per member: element w with w . rep = member
    std::vector<int> stabilizer;    // sorted element indices of G_{x_*}
    std::vector<char> in_subgroup;  // per stabilizer slot: lies in W_0 = x_* itself
    std::unordered_map<int, int> stab_pos;
    std::unordered_map<int, int> member_pos;
  };

  // Block value: per orbit a |X| x |X| matrix of group-algebra vectors
  // indexed by stabilizer position.
  struct Value {
    std::vector<std::vector<std::vector<QVec>>> block;  // [orbit][i][j] -> QVec over stab
  };

  const SubgroupLattice& lattice() const { return *L_; }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  const Orbit& orbit(int o) const { return orbits_[o]; }

  Value zero() const;
  Value identity() const;
  Value theta_group_element(int w) const;
  Value theta_idempotent(int x) const;  // eps_x -> E_{x,x}
  // theta of w * e_L (the Moebius-basis element pushed through zeta)
  Value theta_w_e(int w, int L) const;

  Value multiply(const Value& a, const Value& b) const;
  bool equal(const Value& a, const Value& b) const;

  // matrix trace tensored with the canonical group trace, the group trace
  // being extended by zero off the subgroup's own coset
  Rational block_trace(const Value& v) const;

  // total block dimension sum |X|^2 |G_{x_*}|
  long total_dimension() const;

  // the |W||L| x (total block dimension) matrix of theta over the natural
  // bases; square and invertible when theta is an isomorphism
  IntMatrix basis_matrix() const;

private:
  const SubgroupLattice* L_;
  std::vector<Orbit> orbits_;
  void add_single(Value& v, int orbit, int i, int j, int g, const Rational& c) const;
};

}  // namespace cwl
