#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwl/algebra.hpp"
#include "cwl/subgroups.hpp"
#include "cwl/trace.hpp"

namespace cwl {

using Json = nlohmann::ordered_json;

struct RunConfig {
  CoxeterType type;
  std::string which = "infinity";  // infinity | parabolic | closed | L2 | Ln
  int n = 2;                       // Ln only
  std::vector<std::string> checks;  // relations, blocks, trace, gram, specialization
  std::string out_path;
  std::string cache_dir;
  uint64_t seed = 0;
  int max_orbits = 20;
  bool timings = false;
  bool heavy = false;  // lift the size guards on trace/gram/specialization
};

Json config_json(const RunConfig& cfg);

// canonical single-document cache of the L_infinity enumeration
Json lattice_cache_json(const CoxeterSystem& W, const SubgroupLattice& linf);
std::string cache_file_name(const CoxeterType& t);
std::string dump_json(const Json& j);
void write_file_atomic(const std::string& path, const std::string& content);

// parses a cache document and returns the stored subgroup sets after sanity
// checks against the system; nullopt when unusable
std::optional<std::vector<ReflSet>> parse_lattice_cache(const std::string& content,
                                                        const CoxeterSystem& W);

// L_infinity through the cache directory (empty dir = plain enumeration);
// a valid cache file is trusted after a round-trip integrity check
SubgroupLattice load_or_enumerate_linf(const CoxeterSystem& W, const std::string& cache_dir);

SubgroupLattice make_lattice(const CoxeterSystem& W, const std::string& which, int n);

Json group_report(const RunConfig& cfg, const CoxeterSystem& W);
Json lattice_report(const RunConfig& cfg, const CoxeterSystem& W, const SubgroupLattice& L);
Json admissible_report(const RunConfig& cfg, const CoxeterSystem& W, const SubgroupLattice& linf);

struct VerifyResult {
  Json report;
  bool all_pass = true;
};
VerifyResult verify_report(const RunConfig& cfg, const CoxeterSystem& W,
                           const SubgroupLattice& L);

}  // namespace cwl
