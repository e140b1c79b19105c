#include "cwl/reports.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cwl {

namespace {

Json type_json(const CoxeterType& t) {
  Json j;
  j["family"] = family_name(t.family);
  j["rank"] = t.rank;
  if (t.family == Family::I2) j["m"] = t.m;
  return j;
}

}  // namespace

Json config_json(const RunConfig& cfg) {
  Json j;
  j["type"] = type_json(cfg.type);
  j["which"] = cfg.which;
  if (cfg.which == "Ln") j["n"] = cfg.n;
  if (!cfg.checks.empty()) j["checks"] = cfg.checks;
  j["seed"] = cfg.seed;
  j["max_orbits"] = cfg.max_orbits;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(1) + "\n"; }

std::string cache_file_name(const CoxeterType& t) {
  std::ostringstream out;
  if (t.family == Family::I2)
    out << "I2" << t.m;  // the m parameter identifies a dihedral system
  else
    out << family_name(t.family) << t.rank;
  out << "-Linf.json";
  return out.str();
}

Json lattice_cache_json(const CoxeterSystem& W, const SubgroupLattice& linf) {
  Json j;
  j["type"] = type_json(W.type());
  Json refl = Json::array();
  for (int t = 0; t < W.num_reflections(); ++t) {
    Json r;
    r["index"] = t;
    r["class"] = W.reflection_class(t);
    if (W.crystallographic()) r["root"] = W.roots()[t];
    refl.push_back(std::move(r));
  }
  j["reflections"] = std::move(refl);
  Json subs = Json::array();
  for (int i = 0; i < linf.size(); ++i) subs.push_back(linf.subgroup(i).reflections);
  j["subgroups"] = std::move(subs);
  Json join = Json::array();
  for (int i = 0; i < linf.size(); ++i) {
    std::vector<int> row(linf.size());
    for (int k = 0; k < linf.size(); ++k) row[k] = linf.join(i, k);
    join.push_back(row);
  }
  j["join"] = std::move(join);
  Json action = Json::array();
  for (int s = 0; s < W.rank(); ++s) {
    std::vector<int> row(linf.size());
    for (int i = 0; i < linf.size(); ++i) row[i] = linf.act_generator(s, i);
    action.push_back(row);
  }
  j["action"] = std::move(action);
  Json orbits = Json::array();
  for (int o = 0; o < linf.num_orbits(); ++o) orbits.push_back(linf.orbit_members(o));
  j["orbits"] = std::move(orbits);
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<ReflSet>> parse_lattice_cache(const std::string& content,
                                                        const CoxeterSystem& W) {
  Json j = Json::parse(content, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  try {
    const Json& t = j.at("type");
    if (t.at("family").get<std::string>() != family_name(W.type().family)) return std::nullopt;
    if (t.at("rank").get<int>() != W.type().rank) return std::nullopt;
    if (W.type().family == Family::I2 && t.at("m").get<int>() != W.type().m) return std::nullopt;
    if (static_cast<int>(j.at("reflections").size()) != W.num_reflections()) return std::nullopt;
    std::vector<ReflSet> sets;
    for (const Json& sub : j.at("subgroups")) {
      ReflSet bits = 0;
      for (const Json& t2 : sub) {
        int id = t2.get<int>();
        if (id < 0 || id >= W.num_reflections()) return std::nullopt;
        bits |= refl_bit(id);
      }
      sets.push_back(bits);
    }
    return sets;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

SubgroupLattice load_or_enumerate_linf(const CoxeterSystem& W, const std::string& cache_dir) {
  if (cache_dir.empty()) return SubgroupLattice::enumerate_L_infinity(W);
  std::filesystem::create_directories(cache_dir);
  const std::string path = cache_dir + "/" + cache_file_name(W.type());
  std::ifstream in(path, std::ios::binary);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    auto sets = parse_lattice_cache(content, W);
    if (sets) {
      try {
        SubgroupLattice L = SubgroupLattice::from_cached_sets(W, std::move(*sets));
        if (dump_json(lattice_cache_json(W, L)) == content) return L;
      } catch (const std::exception&) {
        // fall through to re-enumeration
      }
    }
    std::fprintf(stderr, "cache file %s is stale, re-enumerating\n", path.c_str());
  }
  SubgroupLattice L = SubgroupLattice::enumerate_L_infinity(W);
  write_file_atomic(path, dump_json(lattice_cache_json(W, L)));
  return L;
}

SubgroupLattice make_lattice(const CoxeterSystem& W, const std::string& which, int n) {
  if (which == "infinity") return SubgroupLattice::enumerate_L_infinity(W);
  if (which == "L2") return SubgroupLattice::enumerate_L_2(W);
  if (which == "parabolic") return SubgroupLattice::enumerate_L_p(W);
  if (which == "closed") return SubgroupLattice::enumerate_L_c(W);
  if (which == "Ln") return SubgroupLattice::enumerate_L_n(W, n);
  throw std::invalid_argument("unknown lattice selector: " + which);
}

Json group_report(const RunConfig& cfg, const CoxeterSystem& W) {
  Json j;
  j["config"] = config_json(cfg);
  Json g;
  g["type"] = W.type().str();
  g["order"] = W.size();
  g["num_reflections"] = W.num_reflections();
  g["num_classes"] = W.num_classes();
  std::vector<int> class_sizes(W.num_classes(), 0);
  for (int t = 0; t < W.num_reflections(); ++t) ++class_sizes[W.reflection_class(t)];
  g["class_sizes"] = class_sizes;
  g["coxeter_matrix"] = W.coxeter_matrix();
  j["group"] = std::move(g);
  j["status"] = "ok";
  return j;
}

namespace {

Json orbit_rows(const SubgroupLattice& L) {
  Json rows = Json::array();
  for (int o = 0; o < L.num_orbits(); ++o) {
    Json r;
    const int rep = L.orbit_rep(o);
    r["orbit"] = o;
    r["representative"] = L.subgroup(rep).reflections;
    r["type"] = L.subgroup(rep).type_label;
    r["size"] = static_cast<int>(L.orbit_members(o).size());
    r["stabilizer_order"] = L.stabilizer_order(o);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json lattice_report(const RunConfig& cfg, const CoxeterSystem&, const SubgroupLattice& L) {
  Json j;
  j["config"] = config_json(cfg);
  Json lat;
  lat["selector"] = cfg.which;
  lat["size"] = L.size();
  lat["num_orbits"] = L.num_orbits();
  lat["orbits"] = orbit_rows(L);
  j["lattice"] = std::move(lat);
  j["status"] = "ok";
  return j;
}

Json admissible_report(const RunConfig& cfg, const CoxeterSystem& W, const SubgroupLattice& linf) {
  Json j;
  j["config"] = config_json(cfg);
  auto scan = enumerate_intermediate_admissible(W, linf, cfg.max_orbits);

  int lp_size = 0;
  for (const auto& lat : scan.admissible)
    if (lat.added_orbits.empty()) lp_size = static_cast<int>(lat.indices.size());

  Json orbits = Json::array();
  for (size_t k = 0; k < scan.complement_orbits.size(); ++k) {
    const auto& o = scan.complement_orbits[k];
    Json r;
    r["id"] = static_cast<int>(k);
    r["representative"] = linf.subgroup(o.rep).reflections;
    r["type"] = o.type_label;
    r["size"] = o.size;
    orbits.push_back(std::move(r));
  }
  j["linf_size"] = linf.size();
  j["lp_size"] = lp_size;
  j["complement_orbits"] = std::move(orbits);

  Json found = Json::array();
  int strict = 0;
  for (const auto& lat : scan.admissible) {
    const bool is_lp = lat.added_orbits.empty();
    const bool is_linf = static_cast<int>(lat.indices.size()) == linf.size();
    Json r;
    r["added_orbits"] = lat.added_orbits;
    r["size"] = static_cast<int>(lat.indices.size());
    r["strict_intermediate"] = !is_lp && !is_linf;
    if (!is_lp && !is_linf) ++strict;
    found.push_back(std::move(r));
  }
  j["admissible_lattices"] = std::move(found);
  j["strict_intermediate_count"] = strict;
  j["status"] = "ok";
  return j;
}

namespace {

Json relations_entry(const LatticeHeckeAlgebra& A) {
  Json e;
  e["name"] = "relations";
  auto rep = A.verify_relations();
  Json rels = Json::array();
  for (const auto& r : rep.entries) {
    Json one;
    one["relation"] = r.relation;
    one["pass"] = r.pass;
    one["checked"] = r.checked;
    if (!r.pass) one["witness"] = r.witness;
    rels.push_back(std::move(one));
  }
  e["relations"] = std::move(rels);
  e["dimension"] = A.dimension();
  e["status"] = rep.all_pass() ? "pass" : "fail";
  return e;
}

Json blocks_entry(const LatticeHeckeAlgebra& A, const RunConfig& cfg, bool heavy_ok) {
  Json e;
  e["name"] = "blocks";
  auto rep = A.block_dimension_report();
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json one;
    one["orbit"] = r.orbit;
    one["type"] = r.type_label;
    one["orbit_size"] = r.orbit_size;
    one["stabilizer_order"] = r.stabilizer_order;
    one["contribution"] = r.contribution;
    rows.push_back(std::move(one));
  }
  e["rows"] = std::move(rows);
  e["total"] = rep.total;
  e["expected"] = rep.expected;
  bool pass = rep.total == rep.expected;

  const SubgroupLattice& L = A.lattice();
  if (A.dimension() <= 2500 || heavy_ok) {
    bool peirce_ok = true;
    for (int o1 = 0; o1 < L.num_orbits() && peirce_ok; ++o1)
      for (int o2 = 0; o2 < L.num_orbits(); ++o2) {
        int want = o1 == o2 ? static_cast<int>(L.stabilizer_order(o1)) : 0;
        if (A.peirce_dimension(L.orbit_rep(o1), L.orbit_rep(o2)) != want) {
          peirce_ok = false;
          break;
        }
      }
    e["peirce_dimensions"] = peirce_ok ? "pass" : "fail";
    pass = pass && peirce_ok;
  } else {
    e["peirce_dimensions"] = "skipped";
  }

  if (cfg.which == "L2") {
    // kW (+) H(W) (+) one matrix block per reflection class
    bool shape = A.l2_block_shape_matches();
    e["l2_shape"] = shape ? "pass" : "fail";
    pass = pass && shape;
  }

  e["status"] = pass ? "pass" : "fail";
  return e;
}

Json trace_entry(const LatticeHeckeAlgebra& A, const TraceForm& t, bool heavy_ok) {
  Json e;
  e["name"] = "trace";
  if (A.dimension() > 200 && !heavy_ok) {
    e["status"] = "skipped";
    e["reason"] = "dimension too large; rerun with --heavy";
    return e;
  }
  auto rep = check_trace_property(A, t);
  e["ordered_pairs"] = rep.ordered_pairs;
  if (!rep.pass) e["witness"] = rep.witness;
  e["status"] = rep.pass ? "pass" : "fail";
  return e;
}

Json gram_entry(const LatticeHeckeAlgebra& A, const TraceForm& t, const RunConfig& cfg,
                bool heavy_ok) {
  Json e;
  e["name"] = "gram";
  if (A.dimension() > 200 && !heavy_ok) {
    e["status"] = "skipped";
    e["reason"] = "dimension too large; rerun with --heavy";
    return e;
  }
  LaurentMatrix g = gram_matrix(A, t);
  e["dimension"] = static_cast<int>(g.size());

  Int at_one = gram_det_at_one(g);
  e["det_at_one"] = at_one.get_str();

  // seeded fast path: specialization at random primes
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::mt19937_64 rng(cfg.seed);
  std::vector<Rational> point(A.nvars());
  for (auto& p : point) p = Rational(primes[rng() % 12]);
  IntMatrix m(g.size(), std::vector<Int>(g.size()));
  bool fast_ok = true;
  for (size_t i = 0; i < g.size() && fast_ok; ++i)
    for (size_t j = 0; j < g.size(); ++j) {
      Rational v = g[i][j].specialize(point);
      if (v.get_den() != 1) { fast_ok = false; break; }
      m[i][j] = v.get_num();
    }
  Int at_point = fast_ok ? det_int(std::move(m)) : Int(0);
  e["det_at_random_point"] = at_point.get_str();

  bool nonzero = at_one != 0 || at_point != 0;
  if (g.size() <= 80 || heavy_ok) {
    LaurentPoly d = gram_det(g);
    e["det"] = d.str();
    nonzero = !d.is_zero();
  } else if (!nonzero) {
    // inconclusive specializations: fall back to the exact determinant
    LaurentPoly d = gram_det(g);
    e["det"] = d.str();
    nonzero = !d.is_zero();
  }
  e["nonzero"] = nonzero;
  e["status"] = nonzero ? "pass" : "fail";
  return e;
}

Json specialization_entry(const LatticeHeckeAlgebra& A, const TraceForm& t, bool heavy_ok) {
  Json e;
  e["name"] = "specialization";
  if (A.dimension() > 200 && !heavy_ok) {
    e["status"] = "skipped";
    e["reason"] = "dimension too large; rerun with --heavy";
    return e;
  }
  auto rep = check_specialization_consistency(A, t);
  e["structure_pairs"] = rep.structure_pairs;
  e["trace_values"] = rep.trace_values;
  if (!rep.pass()) e["witness"] = rep.witness;
  e["status"] = rep.pass() ? "pass" : "fail";
  return e;
}

}  // namespace

VerifyResult verify_report(const RunConfig& cfg, const CoxeterSystem& W,
                           const SubgroupLattice& L) {
  VerifyResult res;
  res.report["config"] = config_json(cfg);

  std::vector<std::string> checks = cfg.checks;
  if (checks.empty() ||
      std::find(checks.begin(), checks.end(), "all") != checks.end())
    checks = {"relations", "blocks", "trace", "gram", "specialization"};

  LatticeHeckeAlgebra A(W, L);
  TraceForm t = TraceForm::canonical(A);
  const bool heavy = cfg.heavy;

  Json lat;
  lat["selector"] = cfg.which;
  lat["size"] = L.size();
  lat["dimension"] = A.dimension();
  res.report["lattice"] = std::move(lat);

  Json entries = Json::array();
  for (const std::string& name : checks) {
    Json e;
    if (name == "relations")
      e = relations_entry(A);
    else if (name == "blocks")
      e = blocks_entry(A, cfg, heavy);
    else if (name == "trace")
      e = trace_entry(A, t, heavy);
    else if (name == "gram")
      e = gram_entry(A, t, cfg, heavy);
    else if (name == "specialization")
      e = specialization_entry(A, t, heavy);
    else
      throw std::invalid_argument("unknown check: " + name);
    if (e["status"] == "fail") res.all_pass = false;
    entries.push_back(std::move(e));
  }
  res.report["checks"] = std::move(entries);
  res.report["all_pass"] = res.all_pass;
  return res;
}

}  // namespace cwl
