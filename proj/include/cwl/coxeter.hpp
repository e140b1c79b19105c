#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cwl {

enum class Family { A, B, D, I2 };

std::string family_name(Family f);

struct CoxeterType {
  Family family;
  int rank;
  int m = 0;  // dihedral order parameter, I2 only

  static CoxeterType typeA(int rank) { return {Family::A, rank, 0}; }
  static CoxeterType typeB(int rank) { return {Family::B, rank, 0}; }
  static CoxeterType typeD(int rank) { return {Family::D, rank, 0}; }
  static CoxeterType dihedral(int m) { return {Family::I2, 2, m}; }

  void validate() const;  // throws std::invalid_argument
  std::string str() const;
};

// Group element in the concrete model of one system:
//   A_n   permutation of n+1 points, d[i] = w(i)
//   B_n   signed permutation, d[i] = +-j meaning w(e_{i+1}) = +-e_j
//   D_n   as B_n with an even number of sign changes
//   I2(m) pair (rotation exponent mod m, reflection bit)
struct Elem {
  std::vector<int8_t> d;
  bool operator==(const Elem&) const = default;
  bool operator<(const Elem& o) const { return d < o.d; }
};

struct ElemHash {
  size_t operator()(const Elem& e) const {
    size_t h = 1469598103934665603ull;
    for (int8_t x : e.d) {
      h ^= static_cast<size_t>(static_cast<uint8_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

using RootVec = std::vector<int>;

// Signed root index: the image of a positive root is sign * (positive root
// number `index`).
struct SignedRoot {
  int index;
  int sign;
};

/// A finite Coxeter group with every element enumerated, lengths and reduced
/// words from a Cayley-graph BFS, all reflections with their conjugation
/// action, and (for crystallographic types) exact integer root coordinates.
class CoxeterSystem {
public:
  static CoxeterSystem construct(const CoxeterType& t);

  const CoxeterType& type() const { return type_; }
  int rank() const { return static_cast<int>(simples_.size()); }
  int size() const { return static_cast<int>(elements_.size()); }
  bool crystallographic() const { return has_roots_; }

  // model-level operations on element values
  Elem identity_elem() const;
  Elem multiply(const Elem& a, const Elem& b) const;  // a after b
  Elem invert(const Elem& a) const;

  // enumerated layer
  const Elem& element(int w) const { return elements_[w]; }
  int element_index(const Elem& e) const;
  int mult(int a, int b) const;
  int inv(int a) const { return inverse_[a]; }
  int left_mult_simple(int s, int w) const { return left_mult_[s][w]; }
  int simple_element(int s) const { return simple_elem_index_[s]; }
  int length(int w) const { return length_[w]; }
  std::vector<int> reduced_word(int w) const;
  std::vector<std::vector<int>> all_reduced_words(int w) const;
  bool left_descent(int s, int w) const { return length_[left_mult_[s][w]] < length_[w]; }

  // reflections; ids index the positive roots for crystallographic types
  int num_reflections() const { return static_cast<int>(reflections_.size()); }
  int reflection_element(int t) const { return reflections_[t]; }
  int reflection_of_element(int w) const;  // -1 when not a reflection
  int simple_reflection_id(int s) const { return simple_refl_id_[s]; }
  int conjugate_reflection(int w, int t) const;              // w t w^{-1}
  int conj_by_reflection(int t, int u) const { return conj_refl_[t][u]; }
  int reflection_class(int t) const { return refl_class_[t]; }
  int num_classes() const { return num_classes_; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_matrix_; }

  // roots
  const std::vector<RootVec>& roots() const;  // one positive root per reflection
  int root_dim() const;
  RootVec act_on_vector(const Elem& w, const RootVec& v) const;  // A/B/D only
  SignedRoot act_on_root(int w, int t) const;  // any crystallographic type and any I2
  std::optional<SignedRoot> find_root(const RootVec& v) const;
  int inversion_count(int w) const;

private:
  CoxeterType type_;
  std::vector<Elem> simples_;
  std::vector<int> simple_elem_index_;
  std::vector<int> simple_refl_id_;
  std::vector<Elem> elements_;
  std::unordered_map<Elem, int, ElemHash> index_of_;
  std::vector<int> length_;
  std::vector<int> inverse_;
  std::vector<int> bfs_gen_;  // generator s with w = s * parent, -1 for identity
  std::vector<std::vector<int>> left_mult_;
  std::vector<int> reflections_;      // element indices
  std::vector<int> refl_id_of_elem_;  // -1 if not a reflection
  std::vector<std::vector<int>> conj_refl_;
  std::vector<int> refl_class_;
  int num_classes_ = 0;
  std::vector<std::vector<int>> coxeter_matrix_;
  bool has_roots_ = false;
  std::vector<RootVec> roots_;
  std::unordered_map<std::string, SignedRoot> root_lookup_;

  void build_simples();
  void enumerate_elements();
  void build_reflections();
  void build_roots();
  void build_tables();
  static std::string root_key(const RootVec& v);
};

}  // namespace cwl
