#include "cwl/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cwl {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  Rational b = base;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-(long)e) : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (neg) acc = Rational(1) / acc;
  acc.canonicalize();
  return acc;
}

Int int_pow(const Int& base, int e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int var, int power) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  LaurentPoly p(nvars);
  ExpVec e(nvars, 0);
  e[var] = power;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const ExpVec& e, Int c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent size mismatch");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int LaurentPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant polynomial");
  return terms_.empty() ? Int(0) : terms_.begin()->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable-set mismatch");
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  LaurentPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
  if (static_cast<int>(shift.size()) != nvars_) throw std::invalid_argument("exponent size mismatch");
  LaurentPoly r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, c] : terms_) {
    for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + shift[v];
    r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  LaurentPoly rem = *this;
  LaurentPoly quot(nvars_);
  const auto& dlead = *divisor.terms_.rbegin();  // lex-leading term
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Int qc = rlead.second / dlead.second;
    if (qc * dlead.second != rlead.second)
      throw std::domain_error("inexact polynomial division");
    ExpVec qe(nvars_);
    for (int v = 0; v < nvars_; ++v) qe[v] = rlead.first[v] - dlead.first[v];
    LaurentPoly qterm = monomial(nvars_, qe, qc);
    quot += qterm;
    rem -= qterm * divisor;
  }
  return quot;
}

Rational LaurentPoly::specialize(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("specialization value count mismatch");
  for (const Rational& v : values)
    if (v == 0) throw std::domain_error("zero value for an invertible variable");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t(c);
    for (int v = 0; v < nvars_; ++v)
      if (e[v] != 0) t *= rational_pow(values[v], e[v]);
    acc += t;
  }
  acc.canonicalize();
  return acc;
}

Rational LaurentPoly::specialize_all(const Rational& value) const {
  return specialize(std::vector<Rational>(nvars_, value));
}

int LaurentPoly::max_degree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

int LaurentPoly::min_degree(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] < d) d = e[var];
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending lexicographic order: leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool coef_shown = false;
    if (!has_var || (c != 1 && c != -1)) {
      out << c.get_str();
      coef_shown = true;
    } else if (c == -1) {
      out << "-";
    }
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!first_var || coef_shown) out << "*";
      first_var = false;
      if (v < static_cast<int>(names.size()))
        out << names[v];
      else
        out << "u" << (v + 1);
      out << "^" << e[v];
    }
  }
  return out.str();
}

Int det_int(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");
  int sign = 1;
  Int prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { r = i; break; }
      if (r < 0) return Int(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(0, 1);
  const int nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  LaurentPoly acc(nvars);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    LaurentMatrix minor(n - 1, std::vector<LaurentPoly>(n - 1));
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = m[i][c];
      }
    }
    LaurentPoly term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

LaurentPoly det_bareiss(LaurentMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(0, 1);
  const int nvars = m[0][0].nvars();
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nvars, 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) { r = i; break; }
      if (r < 0) return LaurentPoly::zero(nvars);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? num : num.divide_exact(prev);
      }
      m[i][k] = LaurentPoly::zero(nvars);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPoly det(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(0, 1);
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("matrix not square");
  if (n <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

namespace {

// Dense univariate polynomial over Q used while interpolating.
using DensePoly = std::vector<Rational>;

DensePoly newton_interpolate(const std::vector<Int>& points, std::vector<Rational> values) {
  const int n = static_cast<int>(values.size());
  // divided differences in place
  for (int k = 1; k < n; ++k) {
    for (int i = n - 1; i >= k; --i) {
      Rational denom(points[i] - points[i - k]);
      values[i] = (values[i] - values[i - 1]) / denom;
      values[i].canonicalize();
    }
  }
  DensePoly result(1, Rational(0));
  DensePoly basis(1, Rational(1));  // prod_{i<k} (x - t_i)
  for (int k = 0; k < n; ++k) {
    if (result.size() < basis.size()) result.resize(basis.size(), Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) result[i] += values[k] * basis[i];
    // basis *= (x - t_k)
    basis.insert(basis.begin(), Rational(0));
    for (size_t i = 0; i + 1 < basis.size(); ++i) basis[i] -= Rational(points[k]) * basis[i + 1];
  }
  for (auto& c : result) c.canonicalize();
  return result;
}

std::vector<Int> eval_points(int count) {
  std::vector<Int> pts;
  pts.reserve(count);
  long v = 0;
  pts.emplace_back(0);
  while (static_cast<int>(pts.size()) < count) {
    ++v;
    pts.emplace_back(v);
    if (static_cast<int>(pts.size()) < count) pts.emplace_back(-v);
  }
  return pts;
}

Int eval_entry(const LaurentPoly& p, const std::vector<Int>& at) {
  Int acc(0);
  for (const auto& [e, c] : p.terms()) {
    Int t = c;
    for (size_t v = 0; v < at.size(); ++v) {
      if (e[v] < 0) throw std::logic_error("negative exponent after row normalization");
      if (e[v] != 0) t *= int_pow(at[v], e[v]);
    }
    acc += t;
  }
  return acc;
}

}  // namespace

LaurentPoly det_interpolated(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(0, 1);
  const int nvars = m[0][0].nvars();

  // Factor the monomial content out of every row so all entries are ordinary
  // polynomials; det picks up the product of the contents.
  LaurentMatrix work = m;
  ExpVec content_total(nvars, 0);
  for (int i = 0; i < n; ++i) {
    bool all_zero = true;
    ExpVec content(nvars, 0);
    bool first = true;
    for (const auto& entry : work[i]) {
      if (entry.is_zero()) continue;
      all_zero = false;
      for (int v = 0; v < nvars; ++v) {
        int d = entry.min_degree(v);
        if (first || d < content[v]) content[v] = d;
      }
      first = false;
    }
    if (all_zero) return LaurentPoly::zero(nvars);
    ExpVec neg(nvars);
    for (int v = 0; v < nvars; ++v) {
      neg[v] = -content[v];
      content_total[v] += content[v];
    }
    for (auto& entry : work[i]) entry = entry.shifted(neg);
  }

  // Per-variable degree bounds from the data.
  std::vector<int> bound(nvars, 0);
  std::vector<int> active;
  for (int v = 0; v < nvars; ++v) {
    long row_sum = 0, col_sum = 0;
    for (int i = 0; i < n; ++i) {
      int rmax = 0, cmax = 0;
      for (int j = 0; j < n; ++j) {
        rmax = std::max(rmax, work[i][j].max_degree(v));
        cmax = std::max(cmax, work[j][i].max_degree(v));
      }
      row_sum += rmax;
      col_sum += cmax;
    }
    bound[v] = static_cast<int>(std::min(row_sum, col_sum));
    if (bound[v] > 0) active.push_back(v);
  }

  if (active.empty()) {
    IntMatrix im(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) im[i][j] = work[i][j].constant_value();
    return LaurentPoly::constant(nvars, det_int(std::move(im))).shifted(content_total);
  }
  if (active.size() > 2) return det_bareiss(std::move(work)).shifted(content_total);

  if (active.size() == 1) {
    const int v = active[0];
    const int d = bound[v];
    auto pts = eval_points(d + 1);
    std::vector<Rational> vals(d + 1);
    std::vector<Int> at(nvars, 1);
    for (int k = 0; k <= d; ++k) {
      at[v] = pts[k];
      IntMatrix im(n, std::vector<Int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) im[i][j] = eval_entry(work[i][j], at);
      vals[k] = Rational(det_int(std::move(im)));
    }
    DensePoly coeffs = newton_interpolate(pts, std::move(vals));
    LaurentPoly result(nvars);
    for (size_t e = 0; e < coeffs.size(); ++e) {
      if (coeffs[e] == 0) continue;
      if (coeffs[e].get_den() != 1) throw std::logic_error("non-integral interpolated determinant");
      ExpVec ev(nvars, 0);
      ev[v] = static_cast<int>(e);
      result.add_term(ev, coeffs[e].get_num());
    }
    return result.shifted(content_total);
  }

  const int v1 = active[0], v2 = active[1];
  const int d1 = bound[v1], d2 = bound[v2];
  auto pts1 = eval_points(d1 + 1);
  auto pts2 = eval_points(d2 + 1);
  // dets on the grid, then interpolate var2 first, then var1 per coefficient
  std::vector<DensePoly> per_p1(d1 + 1);
  std::vector<Int> at(nvars, 1);
  for (int a = 0; a <= d1; ++a) {
    at[v1] = pts1[a];
    std::vector<Rational> vals(d2 + 1);
    for (int b = 0; b <= d2; ++b) {
      at[v2] = pts2[b];
      IntMatrix im(n, std::vector<Int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) im[i][j] = eval_entry(work[i][j], at);
      vals[b] = Rational(det_int(std::move(im)));
    }
    per_p1[a] = newton_interpolate(pts2, std::move(vals));
  }
  size_t width2 = 0;
  for (const auto& p : per_p1) width2 = std::max(width2, p.size());
  LaurentPoly result(nvars);
  for (size_t e2 = 0; e2 < width2; ++e2) {
    std::vector<Rational> vals(d1 + 1, Rational(0));
    for (int a = 0; a <= d1; ++a)
      if (e2 < per_p1[a].size()) vals[a] = per_p1[a][e2];
    DensePoly coeffs = newton_interpolate(pts1, std::move(vals));
    for (size_t e1 = 0; e1 < coeffs.size(); ++e1) {
      if (coeffs[e1] == 0) continue;
      if (coeffs[e1].get_den() != 1) throw std::logic_error("non-integral interpolated determinant");
      ExpVec ev(nvars, 0);
      ev[v1] = static_cast<int>(e1);
      ev[v2] = static_cast<int>(e2);
      result.add_term(ev, coeffs[e1].get_num());
    }
  }
  return result.shifted(content_total);
}

}  // namespace cwl
