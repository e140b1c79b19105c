#include "cwl/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cwl {

ReflSet refl_bit(int t) { return ReflSet(1) << t; }

std::vector<int> refl_list(ReflSet s) {
  std::vector<int> out;
  while (s) {
    int t = __builtin_ctzll(s);
    out.push_back(t);
    s &= s - 1;
  }
  return out;
}

namespace {

void check_width(const CoxeterSystem& W) {
  if (W.num_reflections() > 64)
    throw std::invalid_argument("lattice machinery supports at most 64 reflections");
}

}  // namespace

ReflSet generate_subgroup_bits(const CoxeterSystem& W, ReflSet seed) {
  check_width(W);
  ReflSet s = seed;
  std::vector<int> pending = refl_list(seed);
  while (!pending.empty()) {
    int t = pending.back();
    pending.pop_back();
    for (int u : refl_list(s)) {
      for (int c : {W.conj_by_reflection(u, t), W.conj_by_reflection(t, u)}) {
        if (!(s & refl_bit(c))) {
          s |= refl_bit(c);
          pending.push_back(c);
        }
      }
    }
  }
  return s;
}

std::vector<int> generate_subgroup(const CoxeterSystem& W, const std::vector<int>& seed) {
  ReflSet s = 0;
  for (int t : seed) {
    if (t < 0 || t >= W.num_reflections()) throw std::invalid_argument("reflection id out of range");
    s |= refl_bit(t);
  }
  return refl_list(generate_subgroup_bits(W, s));
}

std::vector<int> subgroup_elements(const CoxeterSystem& W, const std::vector<int>& refl) {
  std::vector<int> members{0};
  std::vector<char> seen(W.size(), 0);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int t : refl) {
      int v = W.mult(W.reflection_element(t), w);
      if (!seen[v]) {
        seen[v] = 1;
        members.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

struct ComponentType {
  std::string family;  // "A", "B", "D", "G", "I2"
  int rank;
  int m = 0;  // I2 only
  std::string label() const {
    std::ostringstream out;
    if (family == "I2")
      out << "I2(" << m << ")";
    else
      out << family << rank;
    return out.str();
  }
  long order() const {
    if (family == "A") return factorial(rank + 1);
    if (family == "B") return (1L << rank) * factorial(rank);
    if (family == "D") return (1L << (rank - 1)) * factorial(rank);
    if (family == "G") return 12;
    if (family == "I2") return 2L * m;
    return 1;
  }
};

ComponentType rank2_type(int m) {
  if (m == 3) return {"A", 2};
  if (m == 4) return {"B", 2};
  if (m == 6) return {"G", 2};
  return {"I2", 2, m};
}

long dot(const RootVec& a, const RootVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

// Coxeter types of the irreducible components of a crystallographic
// subsystem, via a simple system for the induced positivity.
std::vector<ComponentType> classify_components(const CoxeterSystem& W,
                                               const std::vector<int>& members) {
  const auto& roots = W.roots();
  std::vector<RootVec> pos;
  pos.reserve(members.size());
  for (int t : members) pos.push_back(roots[t]);

  std::map<RootVec, int> pos_index;
  for (size_t i = 0; i < pos.size(); ++i) pos_index.emplace(pos[i], members[i]);

  // simple roots: positive roots that are not a sum of two positive roots
  std::vector<int> simple;  // reflection ids
  for (size_t i = 0; i < pos.size(); ++i) {
    bool is_sum = false;
    for (size_t a = 0; a < pos.size() && !is_sum; ++a)
      for (size_t b = a; b < pos.size() && !is_sum; ++b) {
        RootVec sum(pos[i].size());
        for (size_t k = 0; k < sum.size(); ++k) sum[k] = pos[a][k] + pos[b][k];
        if (sum == pos[i]) is_sum = true;
      }
    if (!is_sum) simple.push_back(members[i]);
  }

  // connected components of the simple system
  const int r = static_cast<int>(simple.size());
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::deque<int> queue{i};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < r; ++b)
        if (comp[b] < 0 && dot(roots[simple[a]], roots[simple[b]]) != 0) {
          comp[b] = ncomp;
          queue.push_back(b);
        }
    }
    ++ncomp;
  }

  auto product_order = [&](int t, int u) {
    int p = W.mult(W.reflection_element(t), W.reflection_element(u));
    int k = p, ord = 1;
    while (k != 0) {
      k = W.mult(k, p);
      ++ord;
    }
    return ord;
  };

  std::vector<ComponentType> types;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < r; ++i)
      if (comp[i] == c) nodes.push_back(simple[i]);
    const int rank = static_cast<int>(nodes.size());
    if (rank == 1) {
      types.push_back({"A", 1});
      continue;
    }
    if (rank == 2) {
      types.push_back(rank2_type(product_order(nodes[0], nodes[1])));
      continue;
    }
    bool has4 = false;
    std::vector<int> degree(rank, 0);
    for (int a = 0; a < rank; ++a)
      for (int b = a + 1; b < rank; ++b) {
        int m = product_order(nodes[a], nodes[b]);
        if (m >= 3) {
          ++degree[a];
          ++degree[b];
        }
        if (m == 4) has4 = true;
      }
    bool branch = std::any_of(degree.begin(), degree.end(), [](int d) { return d >= 3; });
    if (has4)
      types.push_back({"B", rank});
    else if (branch)
      types.push_back({"D", rank});
    else
      types.push_back({"A", rank});
  }
  return types;
}

std::string format_types(std::vector<ComponentType> types) {
  if (types.empty()) return "1";
  std::sort(types.begin(), types.end(), [](const ComponentType& a, const ComponentType& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.family != b.family) return a.family < b.family;
    return a.m < b.m;
  });
  std::ostringstream out;
  size_t i = 0;
  while (i < types.size()) {
    size_t j = i;
    while (j < types.size() && types[j].label() == types[i].label()) ++j;
    out << types[i].label();
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace

ReflectionSubgroup make_subgroup(const CoxeterSystem& W, ReflSet bits) {
  ReflectionSubgroup g;
  g.bits = bits;
  g.reflections = refl_list(bits);
  if (W.crystallographic()) {
    auto types = classify_components(W, g.reflections);
    g.type_label = format_types(types);
    g.order = 1;
    for (const auto& t : types) g.order *= t.order();
  } else {
    // dihedral ambient: the reflection count determines the subgroup
    const int d = static_cast<int>(g.reflections.size());
    if (d == 0) {
      g.type_label = "1";
      g.order = 1;
    } else if (d == 1) {
      g.type_label = "A1";
      g.order = 2;
    } else if (d == 2) {
      g.type_label = "A1^2";
      g.order = 4;
    } else {
      g.type_label = rank2_type(d).label();
      g.order = 2L * d;
    }
  }
  return g;
}

namespace {

// fraction-free row echelon basis of a set of integer root vectors
struct Echelon {
  std::vector<RootVec> rows;  // each with a pivot column
  std::vector<int> pivot;

  // returns false if v was independent (and absorbs it)
  bool reduce(RootVec v, bool absorb) {
    for (size_t r = 0; r < rows.size(); ++r) {
      int pc = pivot[r];
      if (v[pc] == 0) continue;
      int a = rows[r][pc], b = v[pc];
      for (size_t k = 0; k < v.size(); ++k)
        v[k] = a * v[k] - b * rows[r][k];
    }
    int pc = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) { pc = static_cast<int>(k); break; }
    if (pc < 0) return true;  // in span
    if (absorb) {
      rows.push_back(std::move(v));
      pivot.push_back(pc);
    }
    return false;
  }
};

Echelon root_span(const CoxeterSystem& W, ReflSet x) {
  Echelon e;
  for (int t : refl_list(x)) e.reduce(W.roots()[t], true);
  return e;
}

}  // namespace

ReflSet parabolic_closure_bits(const CoxeterSystem& W, ReflSet x) {
  if (!W.crystallographic()) throw std::domain_error("parabolic closure needs root coordinates");
  Echelon span = root_span(W, x);
  ReflSet closure = 0;
  for (int t = 0; t < W.num_reflections(); ++t)
    if (span.reduce(W.roots()[t], false)) closure |= refl_bit(t);
  return closure;
}

int parabolic_rank(const CoxeterSystem& W, ReflSet x) {
  if (!W.crystallographic()) throw std::domain_error("parabolic rank needs root coordinates");
  return static_cast<int>(root_span(W, x).rows.size());
}

bool is_closed_subsystem(const CoxeterSystem& W, ReflSet x) {
  if (!W.crystallographic()) throw std::domain_error("closed subsystems need root coordinates");
  auto members = refl_list(x);
  const auto& roots = W.roots();
  for (size_t a = 0; a < members.size(); ++a)
    for (size_t b = 0; b < members.size(); ++b)
      for (int sign : {1, -1}) {
        // alpha + sign*beta; the other sign combinations are the negatives
        RootVec sum(roots[members[a]].size());
        for (size_t k = 0; k < sum.size(); ++k)
          sum[k] = roots[members[a]][k] + sign * roots[members[b]][k];
        auto hit = W.find_root(sum);
        if (hit && !(x & refl_bit(hit->index))) return false;
      }
  return true;
}

ReflSet closed_closure_bits(const CoxeterSystem& W, ReflSet x) {
  if (!W.crystallographic()) throw std::domain_error("closed closure needs root coordinates");
  ReflSet s = generate_subgroup_bits(W, x);
  const auto& roots = W.roots();
  for (;;) {
    bool grew = false;
    auto members = refl_list(s);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = 0; b < members.size(); ++b)
        for (int sign : {1, -1}) {
          RootVec sum(roots[members[a]].size());
          for (size_t k = 0; k < sum.size(); ++k)
            sum[k] = roots[members[a]][k] + sign * roots[members[b]][k];
          auto hit = W.find_root(sum);
          if (hit && !(s & refl_bit(hit->index))) {
            s |= refl_bit(hit->index);
            grew = true;
          }
        }
    if (!grew) break;
    s = generate_subgroup_bits(W, s);
  }
  return s;
}

SubgroupLattice SubgroupLattice::build(const CoxeterSystem& W, std::vector<ReflSet> sets,
                                       bool closure_joins) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  SubgroupLattice L;
  L.W_ = &W;
  L.elements_.reserve(sets.size());
  for (ReflSet s : sets) L.elements_.push_back(make_subgroup(W, s));
  std::sort(L.elements_.begin(), L.elements_.end(),
            [](const ReflectionSubgroup& a, const ReflectionSubgroup& b) {
              if (a.reflections.size() != b.reflections.size())
                return a.reflections.size() < b.reflections.size();
              return a.reflections < b.reflections;
            });
  for (int i = 0; i < L.size(); ++i) L.index_by_bits_.emplace(L.elements_[i].bits, i);
  L.finish_tables();

  if (!closure_joins) {
    // joins as least upper bounds inside this element set
    const int n = L.size();
    L.join_table_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ReflSet closure = generate_subgroup_bits(W, L.elements_[i].bits | L.elements_[j].bits);
        int jj = L.find(closure);
        if (jj < 0) {
          // least upper bound = the meet of all upper bounds, when present
          ReflSet meet = ~ReflSet(0);
          int count = 0;
          for (int k = 0; k < n; ++k)
            if ((closure & ~L.elements_[k].bits) == 0) {
              meet &= L.elements_[k].bits;
              ++count;
            }
          jj = count > 0 ? L.find(meet) : -1;
          if (jj < 0)
            throw std::domain_error("subset is not a join semilattice");
        }
        L.join_table_[i][j] = L.join_table_[j][i] = jj;
      }
  }
  return L;
}

void SubgroupLattice::finish_tables() {
  const CoxeterSystem& W = *W_;
  rank1_index_.assign(W.num_reflections(), -1);
  for (int t = 0; t < W.num_reflections(); ++t) {
    int i = find(refl_bit(t));
    rank1_index_[t] = i;
  }

  act_gen_.assign(W.rank(), std::vector<int>(size()));
  for (int s = 0; s < W.rank(); ++s) {
    int sid = W.simple_reflection_id(s);
    for (int i = 0; i < size(); ++i) {
      ReflSet mapped = 0;
      for (int t : elements_[i].reflections) mapped |= refl_bit(W.conj_by_reflection(sid, t));
      int j = find(mapped);
      if (j < 0) throw std::domain_error("lattice is not W-stable");
      act_gen_[s][i] = j;
    }
  }

  orbit_of_.assign(size(), -1);
  orbits_.clear();
  for (int i = 0; i < size(); ++i) {
    if (orbit_of_[i] >= 0) continue;
    int o = static_cast<int>(orbits_.size());
    std::vector<int> members;
    std::deque<int> queue{i};
    orbit_of_[i] = o;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int s = 0; s < W.rank(); ++s) {
        int y = act_gen_[s][x];
        if (orbit_of_[y] < 0) {
          orbit_of_[y] = o;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits_.push_back(std::move(members));
  }
}

int SubgroupLattice::find(ReflSet bits) const {
  auto it = index_by_bits_.find(bits);
  return it == index_by_bits_.end() ? -1 : it->second;
}

bool SubgroupLattice::leq(int i, int j) const {
  return (elements_[i].bits & ~elements_[j].bits) == 0;
}

int SubgroupLattice::join(int i, int j) const {
  if (!join_table_.empty()) return join_table_[i][j];
  ReflSet s = generate_subgroup_bits(*W_, elements_[i].bits | elements_[j].bits);
  int k = find(s);
  if (k < 0) throw std::logic_error("join escaped the lattice");
  return k;
}

int SubgroupLattice::act(int w, int i) const {
  auto word = W_->reduced_word(w);
  int x = i;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = act_gen_[*it][x];
  return x;
}

long SubgroupLattice::stabilizer_order(int o) const {
  long n = W_->size();
  long k = static_cast<long>(orbits_[o].size());
  if (n % k != 0) throw std::logic_error("orbit size does not divide |W|");
  return n / k;
}

int SubgroupLattice::count_supersets(int i) const {
  int c = 0;
  for (int j = 0; j < size(); ++j)
    if (leq(i, j)) ++c;
  return c;
}

const std::vector<int>& SubgroupLattice::supersets(int i) const {
  if (supersets_.empty()) {
    supersets_.resize(size());
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        if (leq(a, b)) supersets_[a].push_back(b);
  }
  return supersets_[i];
}

SubgroupLattice SubgroupLattice::enumerate_L_infinity(const CoxeterSystem& W) {
  check_width(W);
  // BFS on joins with the rank-1 subgroups; every full reflection subgroup is
  // a join of rank-1s, so this reaches all of them.
  std::vector<ReflSet> sets{0};
  std::unordered_map<ReflSet, char> seen{{0, 1}};
  std::deque<ReflSet> queue{0};
  while (!queue.empty()) {
    ReflSet x = queue.front();
    queue.pop_front();
    for (int t = 0; t < W.num_reflections(); ++t) {
      if (x & refl_bit(t)) continue;
      ReflSet y = generate_subgroup_bits(W, x | refl_bit(t));
      if (seen.emplace(y, 1).second) {
        sets.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return build(W, std::move(sets), true);
}

SubgroupLattice SubgroupLattice::enumerate_L_2(const CoxeterSystem& W) {
  check_width(W);
  std::vector<ReflSet> sets{0};
  for (int t = 0; t < W.num_reflections(); ++t) sets.push_back(refl_bit(t));
  ReflSet all = 0;
  for (int t = 0; t < W.num_reflections(); ++t) all |= refl_bit(t);
  sets.push_back(generate_subgroup_bits(W, all));
  return build(W, std::move(sets), false);
}

SubgroupLattice SubgroupLattice::enumerate_L_p(const CoxeterSystem& W) {
  SubgroupLattice linf = enumerate_L_infinity(W);
  std::vector<ReflSet> sets;
  for (int i = 0; i < linf.size(); ++i) {
    ReflSet b = linf.subgroup(i).bits;
    if (parabolic_closure_bits(W, b) == b) sets.push_back(b);
  }
  return build(W, std::move(sets), false);
}

SubgroupLattice SubgroupLattice::enumerate_L_c(const CoxeterSystem& W) {
  SubgroupLattice linf = enumerate_L_infinity(W);
  std::vector<ReflSet> sets;
  for (int i = 0; i < linf.size(); ++i) {
    ReflSet b = linf.subgroup(i).bits;
    if (is_closed_subsystem(W, b)) sets.push_back(b);
  }
  return build(W, std::move(sets), false);
}

SubgroupLattice SubgroupLattice::enumerate_L_n(const CoxeterSystem& W, int n) {
  if (n < 2) throw std::invalid_argument("parabolic-rank truncation requires n >= 2");
  SubgroupLattice linf = enumerate_L_infinity(W);
  std::vector<ReflSet> sets;
  for (int i = 0; i < linf.size(); ++i) {
    ReflSet b = linf.subgroup(i).bits;
    if (i == linf.top() || parabolic_rank(W, b) <= n) sets.push_back(b);
  }
  return build(W, std::move(sets), false);
}

SubgroupLattice SubgroupLattice::from_subset(const SubgroupLattice& linf, std::vector<int> indices) {
  std::vector<ReflSet> sets;
  sets.reserve(indices.size());
  for (int i : indices) sets.push_back(linf.subgroup(i).bits);
  return build(linf.system(), std::move(sets), false);
}

SubgroupLattice SubgroupLattice::from_cached_sets(const CoxeterSystem& W, std::vector<ReflSet> sets) {
  return build(W, std::move(sets), true);
}

AdmissibilityReport is_admissible(const SubgroupLattice& linf, const std::vector<int>& subset) {
  const CoxeterSystem& W = linf.system();
  std::vector<char> mask(linf.size(), 0);
  for (int i : subset) mask[i] = 1;

  AdmissibilityReport rep;
  if (!mask[linf.bottom()]) {
    rep.failure = "missing trivial subgroup";
    return rep;
  }
  for (int t = 0; t < W.num_reflections(); ++t)
    if (!mask[linf.rank1_element(t)]) {
      rep.failure = "missing rank-1 subgroup <t" + std::to_string(t) + ">";
      return rep;
    }
  for (int i : subset)
    for (int s = 0; s < W.rank(); ++s)
      if (!mask[linf.act_generator(s, i)]) {
        rep.failure = "not W-stable at element " + std::to_string(i);
        return rep;
      }
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b) {
      int z = linf.join(subset[a], subset[b]);
      if (mask[z]) continue;
      ReflSet meet = ~ReflSet(0);
      int count = 0;
      for (int k : linf.supersets(z))
        if (mask[k]) {
          meet &= linf.subgroup(k).bits;
          ++count;
        }
      int least = count > 0 ? linf.find(meet) : -1;
      bool ok = least >= 0 && mask[least] &&
                (linf.subgroup(z).bits & ~meet) == 0;
      if (!ok) {
        rep.failure = "no least upper bound for pair (" + std::to_string(subset[a]) + "," +
                      std::to_string(subset[b]) + ")";
        return rep;
      }
    }
  rep.admissible = true;
  return rep;
}

IntermediateScan enumerate_intermediate_admissible(const CoxeterSystem& W,
                                                   const SubgroupLattice& linf,
                                                   int max_orbits) {
  std::vector<int> lp;
  std::vector<char> in_lp(linf.size(), 0);
  for (int i = 0; i < linf.size(); ++i) {
    ReflSet b = linf.subgroup(i).bits;
    if (parabolic_closure_bits(W, b) == b) {
      lp.push_back(i);
      in_lp[i] = 1;
    }
  }

  std::vector<int> comp_orbits;
  for (int o = 0; o < linf.num_orbits(); ++o) {
    const auto& members = linf.orbit_members(o);
    int outside = 0;
    for (int i : members)
      if (!in_lp[i]) ++outside;
    if (outside == 0) continue;
    if (outside != static_cast<int>(members.size()))
      throw std::logic_error("parabolic lattice is not a union of orbits");
    comp_orbits.push_back(o);
  }

  IntermediateScan scan;
  for (int o : comp_orbits) {
    OrbitSummary s;
    s.rep = linf.orbit_rep(o);
    s.size = static_cast<int>(linf.orbit_members(o).size());
    s.type_label = linf.subgroup(s.rep).type_label;
    scan.complement_orbits.push_back(s);
  }

  const int k = static_cast<int>(comp_orbits.size());
  if (k > max_orbits)
    throw std::invalid_argument("complement has more orbits than the configured cap");

  for (uint64_t pick = 0; pick < (uint64_t(1) << k); ++pick) {
    std::vector<int> candidate = lp;
    std::vector<int> added;
    for (int j = 0; j < k; ++j)
      if (pick & (uint64_t(1) << j)) {
        added.push_back(j);
        const auto& members = linf.orbit_members(comp_orbits[j]);
        candidate.insert(candidate.end(), members.begin(), members.end());
      }
    std::sort(candidate.begin(), candidate.end());
    if (is_admissible(linf, candidate).admissible)
      scan.admissible.push_back({added, candidate});
  }
  return scan;
}

MapCheck check_admissible_map(const SubgroupLattice& src, const SubgroupLattice& dst,
                              const std::vector<int>& f) {
  const CoxeterSystem& W = src.system();
  MapCheck check;
  if (static_cast<int>(f.size()) != src.size())
    throw std::invalid_argument("map size mismatch");

  if (dst.subgroup(f[src.bottom()]).bits != 0) {
    check.identity_on_atoms = false;
    check.witness = "trivial subgroup not fixed";
    return check;
  }
  for (int t = 0; t < W.num_reflections(); ++t) {
    int i = src.rank1_element(t);
    if (dst.subgroup(f[i]).bits != refl_bit(t)) {
      check.identity_on_atoms = false;
      check.witness = "rank-1 subgroup " + std::to_string(t) + " not fixed";
      return check;
    }
  }
  for (int i = 0; i < src.size(); ++i)
    for (int s = 0; s < W.rank(); ++s)
      if (f[src.act_generator(s, i)] != dst.act_generator(s, f[i])) {
        check.equivariant = false;
        check.witness = "equivariance fails at (s=" + std::to_string(s) + ", x=" + std::to_string(i) + ")";
        return check;
      }
  for (int i = 0; i < src.size(); ++i)
    for (int j = i; j < src.size(); ++j)
      if (f[src.join(i, j)] != dst.join(f[i], f[j])) {
        check.join_preserving = false;
        check.witness = "join fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return check;
      }
  return check;
}

std::vector<int> parabolic_closure_map(const SubgroupLattice& linf, const SubgroupLattice& lp) {
  std::vector<int> f(linf.size());
  for (int i = 0; i < linf.size(); ++i) {
    int j = lp.find(parabolic_closure_bits(linf.system(), linf.subgroup(i).bits));
    if (j < 0) throw std::logic_error("parabolic closure escaped the target lattice");
    f[i] = j;
  }
  return f;
}

std::vector<int> closed_closure_map(const SubgroupLattice& linf, const SubgroupLattice& lc) {
  std::vector<int> f(linf.size());
  for (int i = 0; i < linf.size(); ++i) {
    int j = lc.find(closed_closure_bits(linf.system(), linf.subgroup(i).bits));
    if (j < 0) throw std::logic_error("closed closure escaped the target lattice");
    f[i] = j;
  }
  return f;
}

std::vector<int> truncation_map(const SubgroupLattice& src, const SubgroupLattice& dst) {
  std::vector<int> f(src.size());
  for (int i = 0; i < src.size(); ++i) {
    int j = dst.find(src.subgroup(i).bits);
    f[i] = j >= 0 ? j : dst.top();
  }
  return f;
}

}  // namespace cwl
