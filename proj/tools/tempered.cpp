// Command-line front end: check, catalog, limit, rho and selftest.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tempered/catalog.hpp"
#include "tempered/errors.hpp"
#include "tempered/io.hpp"
#include "tempered/selftest.hpp"

namespace {

using namespace tempered;

constexpr int kExitTempered = 0;
constexpr int kExitNotTempered = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitInput = 64;

struct Options {
  std::uint64_t seed = 42;
  int trials = 32;
  std::size_t chambers = 100000;
  std::string format = "json";
  int jobs = 1;
  bool timings = false;
  std::string filter;
  std::string spec_path;
  std::string suite;
  std::string fixture;
  int samples = 6;

  CriteriaConfig criteria() const {
    CriteriaConfig c;
    c.seed = seed;
    c.trials = trials;
    c.chamber_budget = chambers;
    c.parallelism.jobs = jobs;
    return c;
  }
  bool json() const { return format == "json"; }
};

PairSpec read_spec(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_pair_spec_text(ss.str());
  }
  return load_pair_spec(path);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::True: return kExitTempered;
    case Verdict::False: return kExitNotTempered;
    case Verdict::Undetermined: return kExitUndetermined;
  }
  return kExitUndetermined;
}

int cmd_check(const Options& o) {
  const Pair pair = resolve_pair(read_spec(o.spec_path));
  const auto report = check_tem(pair, o.criteria());
  if (o.json()) {
    print(report_json(report, {o.timings}));
  } else {
    std::cout << report_text(report);
  }
  return report.consistent ? exit_for(report.tem) : kExitInconsistent;
}

int cmd_catalog(const Options& o) {
  const auto specs = filter_catalog(builtin_catalog(), o.filter);
  const auto reports = run_catalog(specs, o.criteria());
  if (o.json()) {
    print(catalog_json(reports, o.criteria(), {o.timings}));
  } else {
    std::cout << catalog_text(reports);
  }
  for (const auto& r : reports)
    if (!r.consistent) return kExitInconsistent;
  return 0;
}

int cmd_limit(const Options& o) {
  const Pair pair = resolve_pair(read_spec(o.spec_path));
  const LieAlgebra& g = *pair.algebra;
  if (!pair.roots) throw UnsupportedError("limit needs a catalog algebra with a root datum");
  const auto tmu = check_tmu(g, &*pair.roots, pair.subalgebra, o.criteria());
  if (tmu.verdict != Verdict::True) {
    std::cerr << "no maximal unipotent meeting h trivially was found: " << tmu.note << "\n";
    return kExitUndetermined;
  }
  const LimitWitness w = contract_to_solvable(g, *pair.roots, *tmu.transported, maximal_unipotent(g, *pair.roots).space());
  if (o.json()) {
    Json j;
    j["label"] = pair.label;
    j["tmu"] = verdict_json(tmu, {o.timings});
    j["limit"] = limit_json(w);
    print(j);
  } else {
    std::cout << limit_text(g, w);
  }
  return 0;
}

int cmd_rho(const Options& o) {
  const Pair pair = resolve_pair(read_spec(o.spec_path));
  const auto v = check_rho(*pair.algebra, pair.subalgebra, pair.toral, o.criteria());
  if (v.verdict == Verdict::Undetermined) {
    std::cerr << v.note << "\n";
    return kExitUndetermined;
  }
  if (o.json()) {
    Json j;
    j["label"] = pair.label;
    j["verdict"] = to_string(v.verdict);
    j["rho"] = rho_json(*v.rho);
    print(j);
  } else {
    std::cout << rho_text(*v.rho);
  }
  return exit_for(v.verdict);
}

int cmd_selftest(const Options& o) {
  SelftestOptions so;
  so.seed = o.seed;
  so.samples = o.samples;
  so.suite = o.suite;
  if (!o.fixture.empty()) so.fixture = o.fixture;
  so.criteria = o.criteria();
  const auto results = run_selftest(so);
  int failed = 0;
  std::string suite;
  for (const auto& r : results) {
    if (r.suite != suite) {
      suite = r.suite;
      std::cout << "[" << suite << "]\n";
    }
    std::cout << "  " << (r.ok() ? "pass " : "FAIL ") << r.name << "  " << r.samples - r.failures << "/" << r.samples;
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
    if (!r.ok()) ++failed;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << " of " << results.size() << " invariants pass\n";
  return failed == 0 ? 0 : 1;
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "base seed for all random choices");
  cmd->add_option("--trials", o.trials, "sampling budget per criterion")->check(CLI::PositiveNumber);
  cmd->add_option("--chambers", o.chambers, "chamber enumeration budget")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", o.timings, "include per-criterion timings in JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperedness criteria for L2(G/H), decided with exact rational arithmetic"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "run all criteria on a pair spec");
  check->add_option("spec", o.spec_path, "PairSpec JSON file, or - for stdin")->required();
  add_run_flags(check, o);

  auto* catalog = app.add_subcommand("catalog", "run the built-in catalog");
  catalog->add_option("--filter", o.filter, "only pairs whose label contains this text");
  add_run_flags(catalog, o);

  auto* limit = app.add_subcommand("limit", "contract a pair to a solvable limit");
  limit->add_option("spec", o.spec_path, "PairSpec JSON file, or - for stdin")->required();
  add_run_flags(limit, o);

  auto* rho = app.add_subcommand("rho", "decide rho_h <= rho_g/h and print the ray table");
  rho->add_option("spec", o.spec_path, "PairSpec JSON file, or - for stdin")->required();
  add_run_flags(rho, o);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--suite", o.suite, "run one suite only")->check(CLI::IsMember(selftest_suites()));
  selftest->add_option("--fixture", o.fixture, "PairSpec file that must resolve cleanly");
  selftest->add_option("--samples", o.samples, "random samples per invariant")->check(CLI::PositiveNumber);
  add_run_flags(selftest, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*catalog) return cmd_catalog(o);
    if (*limit) return cmd_limit(o);
    if (*rho) return cmd_rho(o);
    return cmd_selftest(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
