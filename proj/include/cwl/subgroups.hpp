#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwl/coxeter.hpp"

namespace cwl {

// Reflection subsets as bitsets; lattice machinery supports up to 64
// reflections (D_8 / B_6 scale).
using ReflSet = uint64_t;

ReflSet refl_bit(int t);
std::vector<int> refl_list(ReflSet s);

// Reflection set of the full reflection subgroup generated by a seed,
// computed by closure under mutual conjugation until stable.
ReflSet generate_subgroup_bits(const CoxeterSystem& W, ReflSet seed);
std::vector<int> generate_subgroup(const CoxeterSystem& W, const std::vector<int>& seed);

// Brute-force element enumeration of the subgroup generated by reflections;
// returns sorted element indices. Used for stabilizers, cosets and oracles.
std::vector<int> subgroup_elements(const CoxeterSystem& W, const std::vector<int>& refl);

/// A full reflection subgroup in canonical form: its sorted reflection set,
/// with order and Coxeter type decoded from the root data.
struct ReflectionSubgroup {
  std::vector<int> reflections;
  ReflSet bits = 0;
  long order = 1;
  std::string type_label;  // "1", "A1^4", "A1^2A3", "B2", ...
};

ReflectionSubgroup make_subgroup(const CoxeterSystem& W, ReflSet bits);

// Parabolic closure: reflections whose root lies in the rational span of the
// roots of x. Crystallographic types only.
ReflSet parabolic_closure_bits(const CoxeterSystem& W, ReflSet x);
int parabolic_rank(const CoxeterSystem& W, ReflSet x);

// Smallest closed subsystem containing the roots of x (closed under both
// reflection and root addition). Crystallographic types only.
ReflSet closed_closure_bits(const CoxeterSystem& W, ReflSet x);
bool is_closed_subsystem(const CoxeterSystem& W, ReflSet x);

/// A finite W-stable join-semilattice of reflection subgroups. Elements are
/// sorted canonically by (size, reflection set); index 0 is the trivial
/// subgroup and the last index is W itself.
class SubgroupLattice {
public:
  static SubgroupLattice enumerate_L_infinity(const CoxeterSystem& W);
  static SubgroupLattice enumerate_L_p(const CoxeterSystem& W);
  static SubgroupLattice enumerate_L_c(const CoxeterSystem& W);
  static SubgroupLattice enumerate_L_2(const CoxeterSystem& W);
  static SubgroupLattice enumerate_L_n(const CoxeterSystem& W, int n);

  // The sub-join-semilattice on a subset of an enumerated L_infinity, with
  // joins recomputed as least upper bounds inside the subset. Throws if some
  // pair has no least upper bound.
  static SubgroupLattice from_subset(const SubgroupLattice& linf, std::vector<int> indices);

  // Rebuild a full L_infinity from its cached reflection sets (joins by
  // subgroup closure, as in enumerate_L_infinity).
  static SubgroupLattice from_cached_sets(const CoxeterSystem& W, std::vector<ReflSet> sets);

  const CoxeterSystem& system() const { return *W_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const ReflectionSubgroup& subgroup(int i) const { return elements_[i]; }
  int find(ReflSet bits) const;  // -1 if absent
  bool leq(int i, int j) const;
  int join(int i, int j) const;
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int rank1_element(int reflection) const { return rank1_index_[reflection]; }

  int act_generator(int s, int i) const { return act_gen_[s][i]; }
  int act(int w, int i) const;

  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  const std::vector<int>& orbit_members(int o) const { return orbits_[o]; }
  int orbit_of(int i) const { return orbit_of_[i]; }
  int orbit_rep(int o) const { return orbits_[o].front(); }
  long stabilizer_order(int o) const;

  int count_supersets(int i) const;  // |{ j : i <= j }|, the zeta weight

  const std::vector<int>& supersets(int i) const;

private:
  const CoxeterSystem* W_ = nullptr;
  std::vector<ReflectionSubgroup> elements_;
  std::unordered_map<ReflSet, int> index_by_bits_;
  std::vector<int> rank1_index_;
  std::vector<std::vector<int>> act_gen_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<std::vector<int>> join_table_;       // empty: compute joins by closure
  mutable std::vector<std::vector<int>> supersets_;  // built on first use

  static SubgroupLattice build(const CoxeterSystem& W, std::vector<ReflSet> sets,
                               bool closure_joins);
  void finish_tables();
};

struct AdmissibilityReport {
  bool admissible = false;
  std::string failure;  // empty when admissible
};

// subset given as ascending indices into linf
AdmissibilityReport is_admissible(const SubgroupLattice& linf, const std::vector<int>& subset);

struct OrbitSummary {
  int rep;  // index in L_infinity
  int size;
  std::string type_label;
};

struct IntermediateLattice {
  std::vector<int> added_orbits;  // indices into the complement orbit list
  std::vector<int> indices;       // lattice as indices into L_infinity
};

struct IntermediateScan {
  std::vector<OrbitSummary> complement_orbits;
  std::vector<IntermediateLattice> admissible;  // includes L_p and L_infinity
};

IntermediateScan enumerate_intermediate_admissible(const CoxeterSystem& W,
                                                   const SubgroupLattice& linf,
                                                   int max_orbits = 20);

struct MapCheck {
  bool equivariant = true;
  bool join_preserving = true;
  bool identity_on_atoms = true;
  std::string witness;
  bool pass() const { return equivariant && join_preserving && identity_on_atoms; }
};

// f maps src indices to dst indices; both lattices over the same system.
MapCheck check_admissible_map(const SubgroupLattice& src, const SubgroupLattice& dst,
                              const std::vector<int>& f);

// The three canonical admissible maps, as index maps L_infinity -> target.
std::vector<int> parabolic_closure_map(const SubgroupLattice& linf, const SubgroupLattice& lp);
std::vector<int> closed_closure_map(const SubgroupLattice& linf, const SubgroupLattice& lc);
std::vector<int> truncation_map(const SubgroupLattice& src, const SubgroupLattice& dst);

}  // namespace cwl
