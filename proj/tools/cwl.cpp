#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwl/reports.hpp"

namespace {

struct CliOptions {
  std::string type = "A";
  int rank = 2;
  int m = 5;
  std::string which = "infinity";
  int n = 2;
  std::string checks = "all";
  std::string out;
  std::string cache;
  uint64_t seed = 0;
  int max_orbits = 20;
  bool timings = false;
  bool heavy = false;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--type", opt.type, "group family: A, B, D or I2")
      ->check(CLI::IsMember({"A", "B", "D", "I2"}));
  cmd->add_option("--rank", opt.rank, "rank of the group");
  cmd->add_option("--m", opt.m, "dihedral parameter (I2 only)");
  cmd->add_option("--out", opt.out, "write the JSON report to this path");
  cmd->add_option("--cache", opt.cache, "lattice cache directory");
  cmd->add_option("--max-orbits", opt.max_orbits, "cap on complement orbit count");
  cmd->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
}

void add_lattice_opts(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--which", opt.which, "lattice selector")
      ->check(CLI::IsMember({"infinity", "parabolic", "closed", "L2", "Ln"}));
  cmd->add_option("--n", opt.n, "parabolic-rank bound (Ln only)");
}

cwl::CoxeterType make_type(const CliOptions& opt) {
  if (opt.type == "A") return cwl::CoxeterType::typeA(opt.rank);
  if (opt.type == "B") return cwl::CoxeterType::typeB(opt.rank);
  if (opt.type == "D") return cwl::CoxeterType::typeD(opt.rank);
  return cwl::CoxeterType::dihedral(opt.m);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const cwl::RunConfig& cfg, const cwl::Json& report) {
  std::string text = cwl::dump_json(report);
  if (cfg.out_path.empty())
    std::cout << text;
  else
    cwl::write_file_atomic(cfg.out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the lattice extensions C(W, L) of Hecke algebras"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* cmd_group = app.add_subcommand("group", "order, reflections and classes of W");
  add_common(cmd_group, opt);

  CLI::App* cmd_lattice =
      app.add_subcommand("lattice", "enumerate a subgroup lattice with its orbit decomposition");
  add_common(cmd_lattice, opt);
  add_lattice_opts(cmd_lattice, opt);

  CLI::App* cmd_admissible = app.add_subcommand(
      "admissible", "intermediate admissible lattices between L_p and L_infinity");
  add_common(cmd_admissible, opt);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "relation, block, trace, Gram and specialization checks");
  add_common(cmd_verify, opt);
  add_lattice_opts(cmd_verify, opt);
  cmd_verify->add_option("--checks", opt.checks,
                         "comma list of relations,blocks,trace,gram,specialization or all");
  cmd_verify->add_option("--seed", opt.seed, "seed for sampled specialization points");
  cmd_verify->add_flag("--heavy", opt.heavy, "lift the dimension guards on heavy checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cwl::RunConfig cfg;
    cfg.type = make_type(opt);
    cfg.which = opt.which;
    cfg.n = opt.n;
    cfg.checks = split_csv(opt.checks);
    cfg.out_path = opt.out;
    cfg.cache_dir = opt.cache;
    if (const char* env = std::getenv("LATTICE_HECKE_CACHE")) cfg.cache_dir = env;
    cfg.seed = opt.seed;
    cfg.max_orbits = opt.max_orbits;
    cfg.timings = opt.timings;
    cfg.heavy = opt.heavy;

    const auto t0 = std::chrono::steady_clock::now();
    cwl::CoxeterSystem W = cwl::CoxeterSystem::construct(cfg.type);
    bool ok = true;
    cwl::Json report;

    if (app.got_subcommand(cmd_group)) {
      report = cwl::group_report(cfg, W);
    } else if (app.got_subcommand(cmd_lattice)) {
      if (!cfg.cache_dir.empty()) cwl::load_or_enumerate_linf(W, cfg.cache_dir);
      cwl::SubgroupLattice L = cwl::make_lattice(W, cfg.which, cfg.n);
      report = cwl::lattice_report(cfg, W, L);
    } else if (app.got_subcommand(cmd_admissible)) {
      cfg.which = "infinity";
      cwl::SubgroupLattice linf = cfg.cache_dir.empty()
                                      ? cwl::SubgroupLattice::enumerate_L_infinity(W)
                                      : cwl::load_or_enumerate_linf(W, cfg.cache_dir);
      report = cwl::admissible_report(cfg, W, linf);
    } else {
      cwl::SubgroupLattice L = cwl::make_lattice(W, cfg.which, cfg.n);
      cwl::VerifyResult res = cwl::verify_report(cfg, W, L);
      report = std::move(res.report);
      ok = res.all_pass;
    }

    if (cfg.timings) {
      const auto t1 = std::chrono::steady_clock::now();
      report["timings_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
    emit(cfg, report);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
