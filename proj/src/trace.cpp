#include "cwl/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace cwl {

TraceForm::TraceForm(const LatticeHeckeAlgebra& A) : A_(&A) {
  values_.assign(A.system().size(),
                 std::vector<LaurentPoly>(A.lattice().size(), LaurentPoly::zero(A.nvars())));
}

TraceForm TraceForm::canonical(const LatticeHeckeAlgebra& A) {
  TraceForm t(A);
  const SubgroupLattice& L = A.lattice();
  for (int x = 0; x < L.size(); ++x)
    t.values_[0][x] = LaurentPoly::constant(A.nvars(), L.count_supersets(x));
  return t;
}

LaurentPoly TraceForm::trace(const AlgElem& a) const {
  LaurentPoly acc = LaurentPoly::zero(A_->nvars());
  for (const auto& [k, c] : a.support()) {
    const LaurentPoly& v = values_[k.first][k.second];
    if (!v.is_zero()) acc += c * v;
  }
  return acc;
}

TraceCheckReport check_trace_property(const LatticeHeckeAlgebra& A, const TraceForm& t) {
  TraceCheckReport rep;
  const int n = A.system().size();
  const int nl = A.lattice().size();
  const long dim = A.dimension();
  rep.ordered_pairs = dim * dim;
  for (int w1 = 0; w1 < n; ++w1)
    for (int L1 = 0; L1 < nl; ++L1) {
      AlgElem a = A.basis_elem(w1, L1);
      for (int w2 = w1; w2 < n; ++w2)
        for (int L2 = (w2 == w1 ? L1 : 0); L2 < nl; ++L2) {
          AlgElem b = A.basis_elem(w2, L2);
          if (!(t.trace(A.multiply(a, b)) == t.trace(A.multiply(b, a)))) {
            rep.pass = false;
            std::ostringstream out;
            out << "t(ab) != t(ba) at a=(w=" << w1 << ",L=" << L1 << ") b=(w=" << w2
                << ",L=" << L2 << ")";
            rep.witness = out.str();
            return rep;
          }
        }
    }
  return rep;
}

LaurentMatrix gram_matrix(const LatticeHeckeAlgebra& A, const TraceForm& t) {
  const int n = A.system().size();
  const int nl = A.lattice().size();
  const int dim = n * nl;
  LaurentMatrix g(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(A.nvars())));
  for (int w1 = 0; w1 < n; ++w1)
    for (int L1 = 0; L1 < nl; ++L1) {
      AlgElem a = A.basis_elem(w1, L1);
      for (int w2 = 0; w2 < n; ++w2)
        for (int L2 = 0; L2 < nl; ++L2)
          g[w1 * nl + L1][w2 * nl + L2] = t.trace(A.multiply(a, A.basis_elem(w2, L2)));
    }
  return g;
}

LaurentPoly gram_det(const LaurentMatrix& g) {
  if (g.size() <= 12) return det(g);
  return det_interpolated(g);
}

Int gram_det_at_one(const LaurentMatrix& g) {
  const int n = static_cast<int>(g.size());
  IntMatrix m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = g[i][j].specialize_all(Rational(1));
      if (v.get_den() != 1) throw std::logic_error("non-integral Gram entry at u = 1");
      m[i][j] = v.get_num();
    }
  return det_int(std::move(m));
}

SpecializationReport check_specialization_consistency(const LatticeHeckeAlgebra& A,
                                                      const TraceForm& t) {
  SpecializationReport rep;
  const int n = A.system().size();
  const int nl = A.lattice().size();

  for (int w = 0; w < n && rep.structure_pass; ++w)
    for (int L = 0; L < nl && rep.structure_pass; ++L) {
      AlgElem a = A.basis_elem(w, L);
      for (int v = 0; v < n && rep.structure_pass; ++v)
        for (int M = 0; M < nl; ++M) {
          auto got = specialize_u1(A.multiply(a, A.basis_elem(v, M)));
          auto want_key = A.semidirect_product(w, L, v, M);
          ++rep.structure_pairs;
          bool ok = got.size() == 1 && got.begin()->first == want_key &&
                    got.begin()->second == Rational(1);
          if (!ok) {
            rep.structure_pass = false;
            std::ostringstream out;
            out << "structure constant at u=1 differs from the semidirect law for (w=" << w
                << ",L=" << L << ")x(v=" << v << ",M=" << M << ")";
            rep.witness = out.str();
            break;
          }
        }
    }

  ThetaMap theta(A.lattice());
  for (int w = 0; w < n && rep.trace_pass; ++w)
    for (int L = 0; L < nl; ++L) {
      Rational via_form = t.value(w, L).specialize_all(Rational(1));
      Rational via_blocks = theta.block_trace(theta.theta_w_e(w, L));
      ++rep.trace_values;
      if (via_form != via_blocks) {
        rep.trace_pass = false;
        std::ostringstream out;
        out << "trace at u=1 differs from the theta-route block trace at (w=" << w
            << ",L=" << L << "): " << via_form.get_str() << " vs " << via_blocks.get_str();
        rep.witness = out.str();
        break;
      }
    }
  return rep;
}

}  // namespace cwl
