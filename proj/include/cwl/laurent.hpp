#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace cwl {

using Int = mpz_class;
using Rational = mpq_class;

// Exponent vector: one slot per invertible variable, entries may be negative.
using ExpVec = std::vector<int>;

/// Multivariate Laurent polynomial over Z with a fixed number of variables.
/// Terms are kept in a canonical (lexicographic) order with no zero
/// coefficients, so operator== is structural equality.
class LaurentPoly {
public:
  LaurentPoly() : nvars_(0) {}
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, Int c);
  static LaurentPoly variable(int nvars, int var, int power = 1);
  static LaurentPoly monomial(int nvars, const ExpVec& e, Int c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // zero or the coefficient of the empty monomial
  const std::map<ExpVec, Int>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  void add_term(const ExpVec& e, const Int& c);
  LaurentPoly scaled(const Int& c) const;
  LaurentPoly shifted(const ExpVec& e) const;  // multiply by the monomial u^e

  // Exact division in Z[u^{+-1}]; throws std::domain_error if not exact.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Exact evaluation; every value must be nonzero (the variables are units).
  Rational specialize(const std::vector<Rational>& values) const;
  Rational specialize_all(const Rational& value) const;

  int max_degree(int var) const;  // 0 for the zero polynomial
  int min_degree(int var) const;

  // Deterministic rendering, e.g. "3*u1^2*u2^-1 + u1^1 + -2".
  std::string str(const std::vector<std::string>& names = {}) const;

private:
  int nvars_;
  std::map<ExpVec, Int> terms_;
  void check_compatible(const LaurentPoly& o) const;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) determinant over Z.
Int det_int(IntMatrix m);

// Exact determinant of a square Laurent matrix. Cofactor expansion for
// small sizes, fraction-free Bareiss elimination above that.
LaurentPoly det(const LaurentMatrix& m);
LaurentPoly det_cofactor(const LaurentMatrix& m);
LaurentPoly det_bareiss(LaurentMatrix m);

// Exact determinant through evaluation/interpolation on integer points;
// supports one or two variables and is much faster on large matrices.
// Falls back to det() for constant matrices.
LaurentPoly det_interpolated(const LaurentMatrix& m);

}  // namespace cwl
