#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwl/laurent.hpp"
#include "cwl/moebius.hpp"
#include "cwl/subgroups.hpp"

namespace cwl {

// Element on the basis g_w e_L: finitely supported map (w, L) -> coefficient.
class AlgElem {
public:
  using Support = std::map<std::pair<int, int>, LaurentPoly>;

  AlgElem() = default;
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  void add(int w, int L, const LaurentPoly& c);
  const LaurentPoly* coeff(int w, int L) const;

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem scaled(const LaurentPoly& c) const;
  bool operator==(const AlgElem& o) const { return support_ == o.support_; }

private:
  Support support_;
};

// Classical Iwahori-Hecke algebra element on the T-basis, with its own
// multiplication; serves as the independent route for the split extension.
class HeckeElem {
public:
  using Support = std::map<int, LaurentPoly>;
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  void add(int w, const LaurentPoly& c);
  bool operator==(const HeckeElem& o) const { return support_ == o.support_; }
  HeckeElem& operator+=(const HeckeElem& o);

private:
  Support support_;
};

struct RelationEntry {
  std::string relation;  // quadratic / braid / equivariance / moebius
  bool pass = true;
  long checked = 0;
  std::string witness;
};

struct RelationReport {
  std::vector<RelationEntry> entries;
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

struct BlockRow {
  int orbit;
  int representative;
  std::string type_label;
  int orbit_size;
  long stabilizer_order;
  long contribution;  // |X|^2 |G_{x_*}|
};

struct BlockDimensionReport {
  std::vector<BlockRow> rows;
  long total = 0;
  long expected = 0;  // |W| * |L|
};

/// The algebra C(W, L) realized operationally by the rewriting rules on the
/// free module with basis g_w e_L; well-definedness is checked by
/// verify_relations rather than assumed.
class LatticeHeckeAlgebra {
public:
  // drop_conjugate_join deliberately corrupts the descent rule (negative
  // control for the relation checker)
  enum class RuleVariant { exact, drop_conjugate_join };

  LatticeHeckeAlgebra(const CoxeterSystem& W, const SubgroupLattice& L,
                      RuleVariant variant = RuleVariant::exact);

  const CoxeterSystem& system() const { return *W_; }
  const SubgroupLattice& lattice() const { return *L_; }
  const MoebiusAlgebra& moebius() const { return moebius_; }
  int nvars() const { return nvars_; }
  long dimension() const { return static_cast<long>(W_->size()) * L_->size(); }

  LaurentPoly u_class(int c) const;           // the variable u_c
  LaurentPoly u_of_simple(int s) const;       // u_{class(s)}
  const LaurentPoly& u_minus_one(int s) const { return u_minus_one_[s]; }

  AlgElem one() const;                        // g_1 e_{trivial}
  AlgElem basis_elem(int w, int L) const;

  // left multiplications by e_L and by g_s, termwise by the rewriting rules
  AlgElem mult_e(int L, const AlgElem& a) const;
  AlgElem mult_g(int s, const AlgElem& a) const;

  // apply g_{s_1} ... g_{s_k} (the word acts right-to-left)
  AlgElem apply_word(const std::vector<int>& word, AlgElem a) const;

  AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
  // like multiply for one basis term, along a caller-chosen reduced word of v
  AlgElem multiply_basis_with_word(const std::vector<int>& word, int L, const AlgElem& b) const;

  int lattice_act(int w, int x) const { return action_[w][x]; }
  int lattice_act_inv(int w, int x) const { return action_[W_->inv(w)][x]; }

  // (w e_L)(v e_M) = wv e_{v^{-1}(L) v M}, the u -> 1 semidirect product law
  std::pair<int, int> semidirect_product(int w, int L, int v, int M) const;

  RelationReport verify_relations() const;

  HeckeElem project_to_hecke(const AlgElem& a) const;
  AlgElem split_from_hecke(const HeckeElem& h) const;
  HeckeElem hecke_T(int w) const;
  HeckeElem hecke_multiply(const HeckeElem& a, const HeckeElem& b) const;

  // Peirce corners for the primitive idempotents eps_x
  AlgElem idempotent(int x) const;
  std::vector<AlgElem> peirce_basis(int x, int y) const;
  int peirce_dimension(int x, int y) const;

  BlockDimensionReport block_dimension_report() const;

  // L_2 orbit structure: singleton orbits for the trivial subgroup and W,
  // plus one hyperplane orbit per reflection class of size |c| with
  // stabilizer of order |W|/|c| (orbits may coincide in rank 1)
  bool l2_block_shape_matches() const;

private:
  const CoxeterSystem* W_;
  const SubgroupLattice* L_;
  RuleVariant variant_;
  MoebiusAlgebra moebius_;
  int nvars_;
  std::vector<LaurentPoly> u_minus_one_;        // per simple generator
  std::vector<std::vector<int>> action_;        // element x lattice
  std::vector<std::vector<int>> conj_simple_;   // [w][s] -> id of w^{-1} s w
};

// coefficients of a at u_c -> 1 for all classes, zeros dropped
std::map<std::pair<int, int>, Rational> specialize_u1(const AlgElem& a);

}  // namespace cwl
