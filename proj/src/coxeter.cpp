#include "cwl/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cwl {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
  }
  return "?";
}

void CoxeterType::validate() const {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      break;
    case Family::D:
      if (rank < 2) throw std::invalid_argument("type D requires rank >= 2");
      break;
    case Family::I2:
      if (rank != 2) throw std::invalid_argument("type I2 requires rank = 2");
      if (m < 3) throw std::invalid_argument("type I2 requires m >= 3");
      if (m > 127) throw std::invalid_argument("type I2 supports m <= 127");
      break;
  }
  // keep the eager element enumeration at desk scale
  double order = 1.0;
  switch (family) {
    case Family::A:
      for (int k = 2; k <= rank + 1; ++k) order *= k;
      break;
    case Family::B:
      for (int k = 2; k <= rank; ++k) order *= k;
      for (int k = 0; k < rank; ++k) order *= 2;
      break;
    case Family::D:
      for (int k = 2; k <= rank; ++k) order *= k;
      for (int k = 0; k + 1 < rank; ++k) order *= 2;
      break;
    case Family::I2:
      order = 2.0 * m;
      break;
  }
  if (order > 4.0e6) throw std::invalid_argument("group too large to enumerate");
}

std::string CoxeterType::str() const {
  std::ostringstream out;
  if (family == Family::I2)
    out << "I2(" << m << ")";
  else
    out << family_name(family) << rank;
  return out.str();
}

namespace {

int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

CoxeterSystem CoxeterSystem::construct(const CoxeterType& t) {
  t.validate();
  CoxeterSystem sys;
  sys.type_ = t;
  sys.build_simples();
  sys.enumerate_elements();
  sys.build_roots();
  sys.build_reflections();
  sys.build_tables();
  return sys;
}

Elem CoxeterSystem::identity_elem() const {
  Elem e;
  switch (type_.family) {
    case Family::A:
      e.d.resize(type_.rank + 1);
      for (int i = 0; i <= type_.rank; ++i) e.d[i] = static_cast<int8_t>(i);
      break;
    case Family::B:
    case Family::D:
      e.d.resize(type_.rank);
      for (int i = 0; i < type_.rank; ++i) e.d[i] = static_cast<int8_t>(i + 1);
      break;
    case Family::I2:
      e.d = {0, 0};
      break;
  }
  return e;
}

Elem CoxeterSystem::multiply(const Elem& a, const Elem& b) const {
  if (a.d.size() != b.d.size()) throw std::invalid_argument("model mismatch");
  Elem r;
  switch (type_.family) {
    case Family::A: {
      if (static_cast<int>(a.d.size()) != type_.rank + 1) throw std::invalid_argument("model mismatch");
      r.d.resize(a.d.size());
      for (size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[b.d[i]];
      break;
    }
    case Family::B:
    case Family::D: {
      if (static_cast<int>(a.d.size()) != type_.rank) throw std::invalid_argument("model mismatch");
      r.d.resize(a.d.size());
      for (size_t i = 0; i < a.d.size(); ++i) {
        int bi = b.d[i];
        int j = bi > 0 ? bi : -bi;
        int aj = a.d[j - 1];
        r.d[i] = static_cast<int8_t>(bi > 0 ? aj : -aj);
      }
      break;
    }
    case Family::I2: {
      int k1 = a.d[0], b1 = a.d[1], k2 = b.d[0], b2 = b.d[1];
      int k = b1 == 0 ? floor_mod(k1 + k2, type_.m) : floor_mod(k1 - k2, type_.m);
      r.d = {static_cast<int8_t>(k), static_cast<int8_t>(b1 ^ b2)};
      break;
    }
  }
  return r;
}

Elem CoxeterSystem::invert(const Elem& a) const {
  Elem r;
  switch (type_.family) {
    case Family::A: {
      r.d.resize(a.d.size());
      for (size_t i = 0; i < a.d.size(); ++i) r.d[a.d[i]] = static_cast<int8_t>(i);
      break;
    }
    case Family::B:
    case Family::D: {
      r.d.resize(a.d.size());
      for (size_t i = 0; i < a.d.size(); ++i) {
        int ai = a.d[i];
        int j = ai > 0 ? ai : -ai;
        r.d[j - 1] = static_cast<int8_t>(ai > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1));
      }
      break;
    }
    case Family::I2: {
      if (a.d[1] == 0)
        r.d = {static_cast<int8_t>(floor_mod(-a.d[0], type_.m)), 0};
      else
        r.d = a.d;  // reflections are involutions
      break;
    }
  }
  return r;
}

void CoxeterSystem::build_simples() {
  const int n = type_.rank;
  simples_.clear();
  switch (type_.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) {
        Elem e = identity_elem();
        std::swap(e.d[i], e.d[i + 1]);
        simples_.push_back(e);
      }
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) {
        Elem e = identity_elem();
        std::swap(e.d[i], e.d[i + 1]);
        simples_.push_back(e);
      }
      {
        Elem e = identity_elem();
        e.d[n - 1] = static_cast<int8_t>(-n);
        simples_.push_back(e);
      }
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) {
        Elem e = identity_elem();
        std::swap(e.d[i], e.d[i + 1]);
        simples_.push_back(e);
      }
      {
        Elem e = identity_elem();  // reflection in e_{n-1} + e_n
        e.d[n - 2] = static_cast<int8_t>(-n);
        e.d[n - 1] = static_cast<int8_t>(-(n - 1));
        simples_.push_back(e);
      }
      break;
    case Family::I2:
      simples_.push_back(Elem{{0, 1}});
      simples_.push_back(Elem{{1, 1}});
      break;
  }
}

void CoxeterSystem::enumerate_elements() {
  elements_.clear();
  index_of_.clear();
  length_.clear();
  bfs_gen_.clear();
  Elem id = identity_elem();
  elements_.push_back(id);
  index_of_.emplace(id, 0);
  length_.push_back(0);
  bfs_gen_.push_back(-1);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int s = 0; s < rank(); ++s) {
      Elem v = multiply(simples_[s], elements_[w]);
      auto [it, fresh] = index_of_.emplace(v, static_cast<int>(elements_.size()));
      if (fresh) {
        elements_.push_back(v);
        length_.push_back(length_[w] + 1);
        bfs_gen_.push_back(s);
        queue.push_back(it->second);
      }
    }
  }
  const int N = size();
  left_mult_.assign(rank(), std::vector<int>(N));
  for (int s = 0; s < rank(); ++s)
    for (int w = 0; w < N; ++w)
      left_mult_[s][w] = index_of_.at(multiply(simples_[s], elements_[w]));
  inverse_.resize(N);
  for (int w = 0; w < N; ++w) inverse_[w] = index_of_.at(invert(elements_[w]));
  simple_elem_index_.resize(rank());
  for (int s = 0; s < rank(); ++s) simple_elem_index_[s] = index_of_.at(simples_[s]);
}

int CoxeterSystem::element_index(const Elem& e) const {
  auto it = index_of_.find(e);
  if (it == index_of_.end()) throw std::invalid_argument("element not in this group model");
  return it->second;
}

int CoxeterSystem::mult(int a, int b) const {
  return index_of_.at(multiply(elements_[a], elements_[b]));
}

std::vector<int> CoxeterSystem::reduced_word(int w) const {
  std::vector<int> word;
  while (w != 0) {
    int s = bfs_gen_[w];
    word.push_back(s);
    w = left_mult_[s][w];
  }
  return word;
}

std::vector<std::vector<int>> CoxeterSystem::all_reduced_words(int w) const {
  if (w == 0) return {{}};
  std::vector<std::vector<int>> words;
  for (int s = 0; s < rank(); ++s) {
    if (!left_descent(s, w)) continue;
    for (auto tail : all_reduced_words(left_mult_[s][w])) {
      tail.insert(tail.begin(), s);
      words.push_back(std::move(tail));
    }
  }
  return words;
}

std::string CoxeterSystem::root_key(const RootVec& v) {
  std::string key;
  for (int x : v) {
    key += std::to_string(x);
    key += ',';
  }
  return key;
}

void CoxeterSystem::build_roots() {
  const int n = type_.rank;
  roots_.clear();
  root_lookup_.clear();
  has_roots_ = false;
  auto push = [&](RootVec v) { roots_.push_back(std::move(v)); };
  switch (type_.family) {
    case Family::A: {
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          RootVec v(n + 1, 0);
          v[i] = 1;
          v[j] = -1;
          push(std::move(v));
        }
      has_roots_ = true;
      break;
    }
    case Family::B:
    case Family::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RootVec v(n, 0);
          v[i] = 1;
          v[j] = -1;
          push(std::move(v));
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          RootVec v(n, 0);
          v[i] = 1;
          v[j] = 1;
          push(std::move(v));
        }
      if (type_.family == Family::B)
        for (int i = 0; i < n; ++i) {
          RootVec v(n, 0);
          v[i] = 1;
          push(std::move(v));
        }
      has_roots_ = true;
      break;
    }
    case Family::I2: {
      // angle-ordered positive roots; reflection (k,1) carries root
      // alpha_{(m-k) mod m}
      std::vector<RootVec> alpha;
      if (type_.m == 3)
        alpha = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
      else if (type_.m == 4)
        alpha = {{1, -1}, {1, 0}, {1, 1}, {0, 1}};
      else if (type_.m == 6)
        alpha = {{1, -1, 0}, {1, -2, 1}, {0, -1, 1}, {-1, -1, 2}, {-1, 0, 1}, {-2, 1, 1}};
      if (!alpha.empty()) {
        for (int k = 0; k < type_.m; ++k) push(alpha[(type_.m - k) % type_.m]);
        has_roots_ = true;
      }
      break;
    }
  }
  for (int t = 0; t < static_cast<int>(roots_.size()); ++t) {
    RootVec neg = roots_[t];
    for (int& x : neg) x = -x;
    root_lookup_.emplace(root_key(roots_[t]), SignedRoot{t, 1});
    root_lookup_.emplace(root_key(neg), SignedRoot{t, -1});
  }
}

void CoxeterSystem::build_reflections() {
  reflections_.clear();
  const int n = type_.rank;
  auto add_reflection = [&](const Elem& e) { reflections_.push_back(element_index(e)); };
  switch (type_.family) {
    case Family::A: {
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          Elem e = identity_elem();
          std::swap(e.d[i], e.d[j]);
          add_reflection(e);
        }
      break;
    }
    case Family::B:
    case Family::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Elem e = identity_elem();
          std::swap(e.d[i], e.d[j]);
          add_reflection(e);
        }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Elem e = identity_elem();
          e.d[i] = static_cast<int8_t>(-(j + 1));
          e.d[j] = static_cast<int8_t>(-(i + 1));
          add_reflection(e);
        }
      if (type_.family == Family::B)
        for (int i = 0; i < n; ++i) {
          Elem e = identity_elem();
          e.d[i] = static_cast<int8_t>(-(i + 1));
          add_reflection(e);
        }
      break;
    }
    case Family::I2: {
      for (int k = 0; k < type_.m; ++k) add_reflection(Elem{{static_cast<int8_t>(k), 1}});
      break;
    }
  }
  if (has_roots_ && roots_.size() != reflections_.size())
    throw std::logic_error("root/reflection count mismatch");

  refl_id_of_elem_.assign(size(), -1);
  for (int t = 0; t < num_reflections(); ++t) refl_id_of_elem_[reflections_[t]] = t;

  simple_refl_id_.resize(rank());
  for (int s = 0; s < rank(); ++s) {
    int id = refl_id_of_elem_[simple_elem_index_[s]];
    if (id < 0) throw std::logic_error("simple reflection missing from reflection list");
    simple_refl_id_[s] = id;
  }
}

void CoxeterSystem::build_tables() {
  const int R = num_reflections();
  conj_refl_.assign(R, std::vector<int>(R));
  for (int t = 0; t < R; ++t)
    for (int u = 0; u < R; ++u) {
      int e = mult(reflections_[t], mult(reflections_[u], reflections_[t]));
      int id = refl_id_of_elem_[e];
      if (id < 0) throw std::logic_error("reflection set not conjugation-closed");
      conj_refl_[t][u] = id;
    }

  // conjugacy classes of reflections: orbit closure under generator conjugation
  refl_class_.assign(R, -1);
  num_classes_ = 0;
  for (int t0 = 0; t0 < R; ++t0) {
    if (refl_class_[t0] >= 0) continue;
    int cls = num_classes_++;
    std::deque<int> queue{t0};
    refl_class_[t0] = cls;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int s = 0; s < rank(); ++s) {
        int u = conj_refl_[simple_refl_id_[s]][t];
        if (refl_class_[u] < 0) {
          refl_class_[u] = cls;
          queue.push_back(u);
        }
      }
    }
  }

  coxeter_matrix_.assign(rank(), std::vector<int>(rank(), 1));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (i == j) continue;
      int p = mult(simple_elem_index_[i], simple_elem_index_[j]);
      int k = p, ord = 1;
      while (k != 0) {
        k = mult(k, p);
        ++ord;
      }
      coxeter_matrix_[i][j] = ord;
    }
}

int CoxeterSystem::reflection_of_element(int w) const { return refl_id_of_elem_[w]; }

int CoxeterSystem::conjugate_reflection(int w, int t) const {
  int e = mult(w, mult(reflections_[t], inverse_[w]));
  int id = refl_id_of_elem_[e];
  if (id < 0) throw std::logic_error("conjugate of a reflection is not a reflection");
  return id;
}

const std::vector<RootVec>& CoxeterSystem::roots() const {
  if (!has_roots_) throw std::domain_error("no root coordinates for this type");
  return roots_;
}

int CoxeterSystem::root_dim() const {
  return static_cast<int>(roots().front().size());
}

RootVec CoxeterSystem::act_on_vector(const Elem& w, const RootVec& v) const {
  RootVec r(v.size(), 0);
  switch (type_.family) {
    case Family::A:
      for (size_t i = 0; i < v.size(); ++i) r[w.d[i]] = v[i];
      break;
    case Family::B:
    case Family::D:
      for (size_t i = 0; i < v.size(); ++i) {
        int wi = w.d[i];
        int j = wi > 0 ? wi : -wi;
        r[j - 1] = wi > 0 ? v[i] : -v[i];
      }
      break;
    case Family::I2:
      throw std::domain_error("no coordinate action in the dihedral model");
  }
  return r;
}

SignedRoot CoxeterSystem::act_on_root(int w, int t) const {
  if (type_.family == Family::I2) {
    const int m = type_.m;
    const Elem& e = elements_[w];
    int x = floor_mod(m - t, m);  // angle index of the root of reflection t
    int y;
    int sign = 1;
    if (e.d[1] == 0) {
      y = x - 2 * e.d[0];
    } else {
      y = 2 * floor_mod(m - e.d[0], m) - x;
      sign = -sign;
    }
    int q = (y - floor_mod(y, m)) / m;
    if (floor_mod(q, 2) == 1) sign = -sign;
    int idx = floor_mod(y, m);
    return SignedRoot{floor_mod(m - idx, m), sign};
  }
  RootVec image = act_on_vector(elements_[w], roots()[t]);
  auto it = root_lookup_.find(root_key(image));
  if (it == root_lookup_.end()) throw std::logic_error("image of a root is not a root");
  return it->second;
}

std::optional<SignedRoot> CoxeterSystem::find_root(const RootVec& v) const {
  auto it = root_lookup_.find(root_key(v));
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

int CoxeterSystem::inversion_count(int w) const {
  int count = 0;
  for (int t = 0; t < num_reflections(); ++t)
    if (act_on_root(w, t).sign < 0) ++count;
  return count;
}

}  // namespace cwl
