#include "rtac/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtac/ac3.hpp"
#include "rtac/bench.hpp"
#include "rtac/instance_io.hpp"
#include "rtac/oracle.hpp"
#include "rtac/rtac_engine.hpp"
#include "rtac/search.hpp"

namespace rtac::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GenArgs {
  GenConfig cfg;
  std::string out;
};

struct AcArgs {
  std::string path;
  std::string engine = "rtac";
  std::size_t workers = 1;
};

struct SolveArgs {
  std::string path;
  std::string engine = "rtac";
  std::size_t budget = 0;
  std::size_t workers = 1;
};

struct BenchArgs {
  std::vector<std::size_t> vars{50, 100, 200};
  std::vector<double> densities{0.1, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::string> engines{"rtac", "ac3"};
  std::size_t d = 20;
  double tightness = 0.3;
  std::uint64_t seed = 1;
  std::size_t samples = 2000;
  std::size_t workers = 1;
  std::string out;
  std::string format = "csv";
};

std::vector<std::size_t> all_variables(std::size_t n) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const CspInstance inst = generate(args.cfg);
  if (args.out.empty()) {
    out << to_json(inst, args.cfg);
  } else {
    write_instance_file(args.out, inst, args.cfg);
    out << args.out << '\n';
  }
  return kOk;
}

int cmd_ac(const AcArgs& args, std::ostream& out) {
  const EngineKind engine = parse_engine(args.engine);
  const CspInstance inst = read_instance_file(args.path).instance;
  const auto all = all_variables(inst.n());

  ordered_json report;
  report["engine"] = to_string(engine);
  bool consistent = true;
  const auto start = std::chrono::steady_clock::now();
  if (engine == EngineKind::oracle) {
    const auto result = oracle::fixpoint_ac(inst, DomainSets(inst.n(), inst.d()));
    std::size_t removed = 0;
    for (const auto& round : result.trace.iterations) removed += round.size();
    consistent = !result.wiped_out();
    report["consistent"] = consistent;
    report["removed"] = removed;
    report["iterations"] = result.trace.iterations.size();
  } else if (engine == EngineKind::rtac) {
    WorkerPool pool(args.workers);
    RtacEngine rtac(inst, pool);
    const EnforceOutcome result = rtac.enforce(rtac.initial_domains(), all);
    consistent = result.consistent;
    report["consistent"] = consistent;
    report["removed"] = result.stats.total_removed;
    report["recurrences"] = result.stats.recurrences;
  } else {
    const Ac3Outcome result = ac3(inst, DomainSets(inst.n(), inst.d()), all);
    consistent = result.consistent;
    report["consistent"] = consistent;
    report["removed"] = result.stats.total_removed;
    report["revisions"] = result.stats.revisions;
  }
  report["time_ms"] = elapsed_ms(start);
  out << report.dump() << '\n';
  return consistent ? kOk : kInconsistent;
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const EngineKind engine = parse_engine(args.engine);
  if (engine == EngineKind::oracle) throw UsageError("solve: engine must be rtac or ac3");
  const CspInstance inst = read_instance_file(args.path).instance;
  const std::size_t budget = args.budget == 0 ? kUnlimited : args.budget;

  WorkerPool pool(args.workers);
  std::optional<RtacEngine> rtac;
  std::optional<Ac3Engine> baseline;
  Propagator* propagator = nullptr;
  if (engine == EngineKind::rtac) {
    propagator = &rtac.emplace(inst, pool);
  } else {
    propagator = &baseline.emplace(inst);
  }

  const auto start = std::chrono::steady_clock::now();
  const SearchResult result = solve(inst, *propagator, budget);
  ordered_json report;
  report["engine"] = to_string(engine);
  report["status"] = to_string(result.status);
  report["solution"] = result.status == SearchStatus::solution ? ordered_json(result.solution) : ordered_json(nullptr);
  report["assignments"] = result.stats.assignments;
  report["heuristic"] = kHeuristicName;
  report["time_ms"] = elapsed_ms(start);
  out << report.dump() << '\n';
  return result.status == SearchStatus::unsat ? kInconsistent : kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  BenchConfig cfg;
  cfg.vars = args.vars;
  cfg.densities = args.densities;
  for (const auto& name : args.engines) {
    const EngineKind kind = parse_engine(name);
    if (kind == EngineKind::oracle) throw UsageError("bench: engine must be rtac or ac3");
    cfg.engines.push_back(kind);
  }
  cfg.d = args.d;
  cfg.tightness = args.tightness;
  cfg.seed = args.seed;
  cfg.samples = args.samples;
  for (std::size_t n : cfg.vars) GenConfig{n, cfg.d, 0.0, cfg.tightness, cfg.seed}.validate();
  for (double density : cfg.densities) GenConfig{1, cfg.d, density, cfg.tightness, cfg.seed}.validate();

  WorkerPool pool(args.workers);
  const auto rows = run_bench(cfg, pool);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + args.out);
    sink = &file;
  }
  if (args.format == "json") {
    write_json(*sink, rows);
  } else {
    write_csv(*sink, rows);
  }
  if (!args.out.empty()) out << args.out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc-consistency toolkit: recurrent tensor engine, AC-3 baseline, MAC search", "rtac"};
  app.require_subcommand(1);
  const std::size_t default_workers = WorkerPool::workers_from_env(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random binary CSP instance");
  gen_cmd->add_option("--vars", gen.cfg.n, "Number of variables")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dom", gen.cfg.d, "Domain size")->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--density", gen.cfg.density, "Probability that a variable pair is constrained")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--tightness", gen.cfg.tightness, "Probability that a value pair is forbidden")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.cfg.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");

  AcArgs ac;
  ac.workers = default_workers;
  auto* ac_cmd = app.add_subcommand("ac", "Enforce arc consistency on an instance file");
  ac_cmd->add_option("instance", ac.path, "Instance JSON file")->required();
  ac_cmd->add_option("--engine", ac.engine, "rtac, ac3 or oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"rtac", "ac3", "oracle"}));
  ac_cmd->add_option("--workers", ac.workers, "Kernel worker threads (default RTAC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  SolveArgs sv;
  sv.workers = default_workers;
  auto* solve_cmd = app.add_subcommand("solve", "Backtracking search maintaining arc consistency");
  solve_cmd->add_option("instance", sv.path, "Instance JSON file")->required();
  solve_cmd->add_option("--engine", sv.engine, "rtac or ac3")
      ->capture_default_str()
      ->check(CLI::IsMember({"rtac", "ac3"}));
  solve_cmd->add_option("--budget", sv.budget, "Maximum assignments, 0 for unlimited")->capture_default_str();
  solve_cmd->add_option("--workers", sv.workers, "Kernel worker threads (default RTAC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  BenchArgs bench;
  bench.workers = default_workers;
  auto* bench_cmd = app.add_subcommand("bench", "Per-assignment statistics over an n x density grid");
  bench_cmd->add_option("--vars", bench.vars, "Variable counts, comma separated")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--density", bench.densities, "Densities, comma separated")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--engine", bench.engines, "Engines, comma separated (rtac, ac3)")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember({"rtac", "ac3"}));
  bench_cmd->add_option("--dom", bench.d, "Domain size")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--tightness", bench.tightness, "Probability that a value pair is forbidden")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench.seed, "Generator seed shared by all cells")->capture_default_str();
  bench_cmd->add_option("--samples", bench.samples, "Assignments per cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", bench.workers, "Kernel worker threads (default RTAC_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--out", bench.out, "Output file (stdout when omitted)");
  bench_cmd->add_option("--format", bench.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (ac_cmd->parsed()) return cmd_ac(ac, out);
    if (solve_cmd->parsed()) return cmd_solve(sv, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rtac::cli
