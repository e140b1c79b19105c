#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwl/reports.hpp"

using namespace cwl;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path fresh_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("cwl_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(CWL_CLI_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("cache file names") {
  CHECK(cache_file_name(CoxeterType::typeA(3)) == "A3-Linf.json");
  CHECK(cache_file_name(CoxeterType::typeD(5)) == "D5-Linf.json");
  CHECK(cache_file_name(CoxeterType::dihedral(5)) == "I25-Linf.json");
}

TEST_CASE("cache round-trip is the identity on bytes") {
  for (auto t : {CoxeterType::typeA(3), CoxeterType::typeB(2), CoxeterType::dihedral(5)}) {
    auto W = CoxeterSystem::construct(t);
    auto L = SubgroupLattice::enumerate_L_infinity(W);
    std::string text = dump_json(lattice_cache_json(W, L));
    auto sets = parse_lattice_cache(text, W);
    REQUIRE(sets.has_value());
    auto rebuilt = SubgroupLattice::from_cached_sets(W, std::move(*sets));
    CHECK(dump_json(lattice_cache_json(W, rebuilt)) == text);
  }
}

TEST_CASE("cache rejects mismatched systems") {
  auto A3 = CoxeterSystem::construct(CoxeterType::typeA(3));
  auto B3 = CoxeterSystem::construct(CoxeterType::typeB(3));
  std::string text = dump_json(lattice_cache_json(A3, SubgroupLattice::enumerate_L_infinity(A3)));
  CHECK_FALSE(parse_lattice_cache(text, B3).has_value());
  CHECK_FALSE(parse_lattice_cache("not json", A3).has_value());
}

TEST_CASE("load_or_enumerate writes and reuses the cache") {
  auto dir = fresh_dir("cache");
  auto W = CoxeterSystem::construct(CoxeterType::typeB(2));
  auto L1 = load_or_enumerate_linf(W, dir.string());
  auto path = dir / cache_file_name(W.type());
  REQUIRE(std::filesystem::exists(path));
  std::string first = slurp(path);

  auto L2 = load_or_enumerate_linf(W, dir.string());
  CHECK(L2.size() == L1.size());
  CHECK(slurp(path) == first);

  // a corrupted cache is replaced by a fresh enumeration
  { std::ofstream out(path, std::ios::trunc); out << "{broken"; }
  auto L3 = load_or_enumerate_linf(W, dir.string());
  CHECK(L3.size() == L1.size());
  CHECK(slurp(path) == first);
  std::filesystem::remove_all(dir);
}

TEST_CASE("selector validation") {
  auto I25 = CoxeterSystem::construct(CoxeterType::dihedral(5));
  CHECK_THROWS_AS(make_lattice(I25, "parabolic", 2), std::domain_error);
  CHECK_THROWS_AS(make_lattice(I25, "closed", 2), std::domain_error);
  CHECK_THROWS_AS(make_lattice(I25, "nope", 2), std::invalid_argument);
  auto B2 = CoxeterSystem::construct(CoxeterType::typeB(2));
  CHECK_THROWS_AS(make_lattice(B2, "Ln", 1), std::invalid_argument);
  CHECK(make_lattice(B2, "Ln", 2).size() == 8);
}

TEST_CASE("reports are byte-identical across runs") {
  RunConfig cfg;
  cfg.type = CoxeterType::typeA(2);
  cfg.which = "infinity";
  cfg.seed = 42;
  auto W = CoxeterSystem::construct(cfg.type);
  auto L = make_lattice(W, cfg.which, cfg.n);

  CHECK(dump_json(group_report(cfg, W)) == dump_json(group_report(cfg, W)));
  CHECK(dump_json(lattice_report(cfg, W, L)) == dump_json(lattice_report(cfg, W, L)));
  auto v1 = verify_report(cfg, W, L);
  auto v2 = verify_report(cfg, W, L);
  CHECK(v1.all_pass);
  CHECK(dump_json(v1.report) == dump_json(v2.report));

  auto linf = SubgroupLattice::enumerate_L_infinity(W);
  CHECK(dump_json(admissible_report(cfg, W, linf)) == dump_json(admissible_report(cfg, W, linf)));
}

TEST_CASE("verify report content") {
  RunConfig cfg;
  cfg.type = CoxeterType::typeB(2);
  cfg.which = "L2";
  auto W = CoxeterSystem::construct(cfg.type);
  auto L = make_lattice(W, cfg.which, cfg.n);
  auto res = verify_report(cfg, W, L);
  CHECK(res.all_pass);
  REQUIRE(res.report.contains("checks"));
  bool saw_l2_shape = false;
  for (const auto& e : res.report["checks"]) {
    CHECK(e["status"] == "pass");
    if (e.contains("l2_shape")) {
      saw_l2_shape = true;
      CHECK(e["l2_shape"] == "pass");
    }
  }
  CHECK(saw_l2_shape);
}

TEST_CASE("cli exit codes and output files") {
  auto dir = fresh_dir("cli");
  auto out = dir / "report.json";

  CHECK(run_cli("group --type A --rank 2 --out " + out.string()) == 0);
  CHECK(std::filesystem::exists(out));
  std::string first = slurp(out);
  CHECK(first.find("\"order\": 6") != std::string::npos);

  CHECK(run_cli("group --type A --rank 2 --out " + out.string()) == 0);
  CHECK(slurp(out) == first);  // byte-identical rerun

  CHECK(run_cli("verify --type A --rank 1 --which infinity --out " + out.string()) == 0);
  CHECK(run_cli("verify --type B --rank 2 --which Ln --n 2 --out " + out.string()) == 0);
  CHECK(run_cli("group --type A --rank 0 --out " + out.string()) == 2);   // invalid rank
  CHECK(run_cli("group --type Z --rank 2 2>/dev/null") == 2);             // bad family
  CHECK(run_cli("verify --type I2 --m 5 --which parabolic 2>/dev/null") == 2);
  CHECK(run_cli("admissible --type D --rank 4 --out " + out.string()) == 0);
  std::string adm = slurp(out);
  CHECK(adm.find("\"strict_intermediate_count\": 0") != std::string::npos);
  CHECK(adm.find("A1^4") != std::string::npos);

  // the environment variable overrides --cache
  auto envdir = dir / "envcache";
  std::filesystem::create_directories(envdir);
  std::string cmd = "LATTICE_HECKE_CACHE=" + envdir.string() + " " + std::string(CWL_CLI_PATH) +
                    " lattice --type B --rank 2 --cache " + (dir / "ignored").string() +
                    " --out " + out.string();
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(std::filesystem::exists(envdir / "B2-Linf.json"));
  CHECK_FALSE(std::filesystem::exists(dir / "ignored" / "B2-Linf.json"));

  std::filesystem::remove_all(dir);
}
