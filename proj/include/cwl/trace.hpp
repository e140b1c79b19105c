#pragma once

#include <string>
#include <vector>

#include "cwl/algebra.hpp"

namespace cwl {

/// Linear form on C(W, L) given by its values on the basis g_w e_L. The
/// canonical candidate is t(g_w e_L) = delta_{w,1} * zeta(L), where zeta(L)
/// counts the lattice elements above L; whether it is a trace is verified,
/// not assumed.
class TraceForm {
public:
  static TraceForm canonical(const LatticeHeckeAlgebra& A);

  const LatticeHeckeAlgebra& algebra() const { return *A_; }
  const LaurentPoly& value(int w, int L) const { return values_[w][L]; }
  void set_value(int w, int L, LaurentPoly v) { values_[w][L] = std::move(v); }

  LaurentPoly trace(const AlgElem& a) const;

private:
  explicit TraceForm(const LatticeHeckeAlgebra& A);
  const LatticeHeckeAlgebra* A_;
  std::vector<std::vector<LaurentPoly>> values_;
};

struct TraceCheckReport {
  bool pass = true;
  long ordered_pairs = 0;
  std::string witness;
};

// trace(ab) == trace(ba) on all ordered basis pairs
TraceCheckReport check_trace_property(const LatticeHeckeAlgebra& A, const TraceForm& t);

// Gram matrix G[(w,L)][(v,M)] = t(g_w e_L g_v e_M), basis ordered w-major
LaurentMatrix gram_matrix(const LatticeHeckeAlgebra& A, const TraceForm& t);

// exact symbolic determinant (interpolation for large matrices)
LaurentPoly gram_det(const LaurentMatrix& g);

// determinant of the Gram matrix specialized at u_c = 1; an exact nonzero
// value certifies gram_det != 0
Int gram_det_at_one(const LaurentMatrix& g);

struct SpecializationReport {
  bool structure_pass = true;
  bool trace_pass = true;
  long structure_pairs = 0;
  long trace_values = 0;
  std::string witness;
  bool pass() const { return structure_pass && trace_pass; }
};

// at u_c -> 1: every structure constant equals the semidirect-product law and
// the trace matches the block trace computed independently through theta
SpecializationReport check_specialization_consistency(const LatticeHeckeAlgebra& A,
                                                      const TraceForm& t);

}  // namespace cwl
