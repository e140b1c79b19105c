#include "cwl/algebra.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cwl {

void AlgElem::add(int w, int L, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(w, L);
  auto it = support_.find(key);
  if (it == support_.end()) {
    support_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) support_.erase(it);
  }
}

const LaurentPoly* AlgElem::coeff(int w, int L) const {
  auto it = support_.find({w, L});
  return it == support_.end() ? nullptr : &it->second;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [k, c] : o.support_) add(k.first, k.second, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [k, c] : o.support_) add(k.first, k.second, -c);
  return *this;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  AlgElem r = *this;
  r += o;
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  AlgElem r = *this;
  r -= o;
  return r;
}

AlgElem AlgElem::scaled(const LaurentPoly& c) const {
  AlgElem r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : support_) r.add(k.first, k.second, v * c);
  return r;
}

void HeckeElem::add(int w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = support_.find(w);
  if (it == support_.end()) {
    support_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) support_.erase(it);
  }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  for (const auto& [w, c] : o.support_) add(w, c);
  return *this;
}

LatticeHeckeAlgebra::LatticeHeckeAlgebra(const CoxeterSystem& W, const SubgroupLattice& L,
                                         RuleVariant variant)
    : W_(&W), L_(&L), variant_(variant), moebius_(L), nvars_(W.num_classes()) {
  u_minus_one_.reserve(W.rank());
  for (int s = 0; s < W.rank(); ++s) {
    int c = W.reflection_class(W.simple_reflection_id(s));
    u_minus_one_.push_back(LaurentPoly::variable(nvars_, c) - LaurentPoly::constant(nvars_, 1));
  }
  action_.assign(W.size(), std::vector<int>(L.size()));
  for (int x = 0; x < L.size(); ++x) action_[0][x] = x;
  // fill by BFS order: w = s * parent
  for (int w = 1; w < W.size(); ++w) {
    auto word = W.reduced_word(w);
    int s = word.front();
    int parent = W.left_mult_simple(s, w);
    for (int x = 0; x < L.size(); ++x) action_[w][x] = L.act_generator(s, action_[parent][x]);
  }
  conj_simple_.assign(W.size(), std::vector<int>(W.rank()));
  for (int w = 0; w < W.size(); ++w)
    for (int s = 0; s < W.rank(); ++s)
      conj_simple_[w][s] = W.conjugate_reflection(W.inv(w), W.simple_reflection_id(s));
}

LaurentPoly LatticeHeckeAlgebra::u_class(int c) const {
  return LaurentPoly::variable(nvars_, c);
}

LaurentPoly LatticeHeckeAlgebra::u_of_simple(int s) const {
  return u_class(W_->reflection_class(W_->simple_reflection_id(s)));
}

AlgElem LatticeHeckeAlgebra::one() const { return basis_elem(0, L_->bottom()); }

AlgElem LatticeHeckeAlgebra::basis_elem(int w, int L) const {
  AlgElem a;
  a.add(w, L, LaurentPoly::constant(nvars_, 1));
  return a;
}

AlgElem LatticeHeckeAlgebra::mult_e(int L, const AlgElem& a) const {
  AlgElem out;
  for (const auto& [k, c] : a.support()) {
    const auto [w, M] = k;
    out.add(w, L_->join(lattice_act_inv(w, L), M), c);
  }
  return out;
}

AlgElem LatticeHeckeAlgebra::mult_g(int s, const AlgElem& a) const {
  AlgElem out;
  for (const auto& [k, c] : a.support()) {
    const auto [w, M] = k;
    const int sw = W_->left_mult_simple(s, w);
    if (W_->length(sw) > W_->length(w)) {
      out.add(sw, M, c);
      continue;
    }
    // descent: w = s w', and
    // g_s g_w e_M = g_{w'} e_M + (u_s-1) g_{w'} e_{<s^{w'}> v M}
    //                          + (u_s-1) g_w  e_{<s^{w}> v M}
    const int wp = sw;
    const LaurentPoly um1c = c * u_minus_one_[s];
    out.add(wp, M, c);
    int join1 = variant_ == RuleVariant::drop_conjugate_join
                    ? M
                    : L_->join(L_->rank1_element(conj_simple_[wp][s]), M);
    out.add(wp, join1, um1c);
    out.add(w, L_->join(L_->rank1_element(conj_simple_[w][s]), M), um1c);
  }
  return out;
}

AlgElem LatticeHeckeAlgebra::apply_word(const std::vector<int>& word, AlgElem a) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) a = mult_g(*it, a);
  return a;
}

AlgElem LatticeHeckeAlgebra::multiply(const AlgElem& a, const AlgElem& b) const {
  AlgElem out;
  for (const auto& [k, c] : a.support()) {
    const auto [v, L] = k;
    AlgElem term = apply_word(W_->reduced_word(v), mult_e(L, b));
    out += term.scaled(c);
  }
  return out;
}

AlgElem LatticeHeckeAlgebra::multiply_basis_with_word(const std::vector<int>& word, int L,
                                                      const AlgElem& b) const {
  return apply_word(word, mult_e(L, b));
}

std::pair<int, int> LatticeHeckeAlgebra::semidirect_product(int w, int L, int v, int M) const {
  return {W_->mult(w, v), L_->join(lattice_act_inv(v, L), M)};
}

RelationReport LatticeHeckeAlgebra::verify_relations() const {
  RelationReport report;
  const int n = W_->size();
  const int nl = L_->size();

  auto witness = [&](int w, int M, const std::string& extra) {
    std::ostringstream out;
    out << "basis vector (w=" << w << ", L=" << M << ") " << extra;
    return out.str();
  };

  RelationEntry quad;
  quad.relation = "quadratic";
  for (int s = 0; s < W_->rank() && quad.pass; ++s) {
    const int s_rank1 = L_->rank1_element(W_->simple_reflection_id(s));
    for (int w = 0; w < n && quad.pass; ++w)
      for (int M = 0; M < nl; ++M) {
        AlgElem x = basis_elem(w, M);
        AlgElem gx = mult_g(s, x);
        AlgElem lhs = mult_g(s, gx);
        AlgElem rhs = x + mult_e(s_rank1, x + gx).scaled(u_minus_one_[s]);
        ++quad.checked;
        if (!(lhs == rhs)) {
          quad.pass = false;
          quad.witness = witness(w, M, "s=" + std::to_string(s));
          break;
        }
      }
  }
  report.entries.push_back(quad);

  RelationEntry braid;
  braid.relation = "braid";
  for (int s = 0; s < W_->rank() && braid.pass; ++s)
    for (int t = s + 1; t < W_->rank() && braid.pass; ++t) {
      const int m = W_->coxeter_matrix()[s][t];
      std::vector<int> word_st, word_ts;
      for (int i = 0; i < m; ++i) {
        word_st.push_back(i % 2 == 0 ? s : t);
        word_ts.push_back(i % 2 == 0 ? t : s);
      }
      for (int w = 0; w < n && braid.pass; ++w)
        for (int M = 0; M < nl; ++M) {
          AlgElem x = basis_elem(w, M);
          ++braid.checked;
          if (!(apply_word(word_st, x) == apply_word(word_ts, x))) {
            braid.pass = false;
            braid.witness = witness(w, M, "pair (" + std::to_string(s) + "," + std::to_string(t) + ")");
            break;
          }
        }
    }
  report.entries.push_back(braid);

  RelationEntry equiv;
  equiv.relation = "equivariance";
  for (int s = 0; s < W_->rank() && equiv.pass; ++s)
    for (int L = 0; L < nl && equiv.pass; ++L) {
      const int sL = L_->act_generator(s, L);
      for (int w = 0; w < n && equiv.pass; ++w)
        for (int M = 0; M < nl; ++M) {
          AlgElem x = basis_elem(w, M);
          ++equiv.checked;
          if (!(mult_g(s, mult_e(L, x)) == mult_e(sL, mult_g(s, x)))) {
            equiv.pass = false;
            equiv.witness = witness(w, M, "s=" + std::to_string(s) + " L=" + std::to_string(L));
            break;
          }
        }
    }
  report.entries.push_back(equiv);

  RelationEntry moeb;
  moeb.relation = "moebius";
  for (int L = 0; L < nl && moeb.pass; ++L)
    for (int M2 = 0; M2 < nl && moeb.pass; ++M2) {
      const int LM = L_->join(L, M2);
      for (int w = 0; w < n && moeb.pass; ++w)
        for (int M = 0; M < nl; ++M) {
          AlgElem x = basis_elem(w, M);
          ++moeb.checked;
          if (!(mult_e(L, mult_e(M2, x)) == mult_e(LM, x))) {
            moeb.pass = false;
            moeb.witness = witness(w, M, "L=" + std::to_string(L) + " M=" + std::to_string(M2));
            break;
          }
        }
    }
  report.entries.push_back(moeb);

  return report;
}

HeckeElem LatticeHeckeAlgebra::project_to_hecke(const AlgElem& a) const {
  HeckeElem h;
  for (const auto& [k, c] : a.support()) h.add(k.first, c);
  return h;
}

AlgElem LatticeHeckeAlgebra::split_from_hecke(const HeckeElem& h) const {
  AlgElem a;
  for (const auto& [w, c] : h.support()) a.add(w, L_->top(), c);
  return a;
}

HeckeElem LatticeHeckeAlgebra::hecke_T(int w) const {
  HeckeElem h;
  h.add(w, LaurentPoly::constant(nvars_, 1));
  return h;
}

HeckeElem LatticeHeckeAlgebra::hecke_multiply(const HeckeElem& a, const HeckeElem& b) const {
  HeckeElem out;
  for (const auto& [v, c] : a.support()) {
    HeckeElem acc;
    for (const auto& [w, d] : b.support()) acc.add(w, c * d);
    auto word = W_->reduced_word(v);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int s = *it;
      HeckeElem next;
      for (const auto& [w, d] : acc.support()) {
        const int sw = W_->left_mult_simple(s, w);
        if (W_->length(sw) > W_->length(w)) {
          next.add(sw, d);
        } else {
          // T_s T_w = (u_s - 1) T_w + u_s T_{sw}
          next.add(w, d * u_minus_one_[s]);
          next.add(sw, d * u_of_simple(s));
        }
      }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

AlgElem LatticeHeckeAlgebra::idempotent(int x) const {
  AlgElem a;
  for (int mu = 0; mu < L_->size(); ++mu) {
    const Int& m = moebius_.moebius(x, mu);
    if (m != 0) a.add(0, mu, LaurentPoly::constant(nvars_, m));
  }
  return a;
}

std::vector<AlgElem> LatticeHeckeAlgebra::peirce_basis(int x, int y) const {
  // eps_x g_w eps_y is graded by w (only e-multiplications are involved), so
  // the nonzero products are linearly independent
  std::vector<AlgElem> basis;
  const AlgElem ex = idempotent(x);
  const AlgElem ey = idempotent(y);
  for (int w = 0; w < W_->size(); ++w) {
    AlgElem gw_ey;
    for (const auto& [k, c] : ey.support()) gw_ey.add(w, k.second, c);
    AlgElem p = multiply(ex, gw_ey);
    if (!p.is_zero()) basis.push_back(std::move(p));
  }
  return basis;
}

int LatticeHeckeAlgebra::peirce_dimension(int x, int y) const {
  return static_cast<int>(peirce_basis(x, y).size());
}

BlockDimensionReport LatticeHeckeAlgebra::block_dimension_report() const {
  BlockDimensionReport rep;
  for (int o = 0; o < L_->num_orbits(); ++o) {
    BlockRow row;
    row.orbit = o;
    row.representative = L_->orbit_rep(o);
    row.type_label = L_->subgroup(row.representative).type_label;
    row.orbit_size = static_cast<int>(L_->orbit_members(o).size());
    row.stabilizer_order = L_->stabilizer_order(o);
    row.contribution = static_cast<long>(row.orbit_size) * row.orbit_size * row.stabilizer_order;
    rep.total += row.contribution;
    rep.rows.push_back(row);
  }
  rep.expected = dimension();
  return rep;
}

bool LatticeHeckeAlgebra::l2_block_shape_matches() const {
  const SubgroupLattice& L = *L_;
  const CoxeterSystem& W = *W_;
  std::set<int> seen;
  for (int i : {L.bottom(), L.top()}) {
    int o = L.orbit_of(i);
    seen.insert(o);
    if (L.orbit_members(o).size() != 1 || L.stabilizer_order(o) != W.size()) return false;
  }
  std::vector<long> class_sizes(W.num_classes(), 0);
  for (int t = 0; t < W.num_reflections(); ++t) ++class_sizes[W.reflection_class(t)];
  for (int c = 0; c < W.num_classes(); ++c) {
    int t = 0;
    while (W.reflection_class(t) != c) ++t;
    int o = L.orbit_of(L.rank1_element(t));
    seen.insert(o);
    if (static_cast<long>(L.orbit_members(o).size()) != class_sizes[c]) return false;
    if (L.stabilizer_order(o) * class_sizes[c] != W.size()) return false;
  }
  return static_cast<int>(seen.size()) == L.num_orbits();
}

std::map<std::pair<int, int>, Rational> specialize_u1(const AlgElem& a) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [k, c] : a.support()) {
    Rational v = c.specialize_all(Rational(1));
    if (v != 0) out.emplace(k, v);
  }
  return out;
}

}  // namespace cwl
