#include "rtac/bench.hpp"

#include <charconv>

#include <json.hpp>

#include "rtac/ac3.hpp"
#include "rtac/rtac_engine.hpp"
#include "rtac/search.hpp"

namespace rtac {

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::rtac:
      return "rtac";
    case EngineKind::ac3:
      return "ac3";
    case EngineKind::oracle:
      return "oracle";
  }
  return "unknown";
}

EngineKind parse_engine(std::string_view name) {
  if (name == "rtac") return EngineKind::rtac;
  if (name == "ac3") return EngineKind::ac3;
  if (name == "oracle") return EngineKind::oracle;
  throw UsageError("unknown engine \"" + std::string(name) + "\" (expected rtac, ac3 or oracle)");
}

namespace {

SearchResult solve_one(const CspInstance& inst, EngineKind engine, std::size_t budget, WorkerPool& pool) {
  if (engine == EngineKind::rtac) {
    RtacEngine propagator(inst, pool);
    return solve(inst, propagator, budget);
  }
  if (engine == EngineKind::ac3) {
    Ac3Engine propagator(inst);
    return solve(inst, propagator, budget);
  }
  throw UsageError("bench: engine must be rtac or ac3");
}

// first is the already generated instance for cfg.seed, when available.
BenchRow run_on(const CspInstance* first, const GenConfig& cfg, EngineKind engine, std::size_t samples,
                WorkerPool& pool) {
  if (samples == 0) throw UsageError("bench: samples must be at least 1");
  if (engine == EngineKind::oracle) throw UsageError("bench: engine must be rtac or ac3");
  BenchRow row;
  row.n = cfg.n;
  row.density = cfg.density;
  row.d = cfg.d;
  row.tightness = cfg.tightness;
  row.seed = cfg.seed;
  row.engine = engine;

  double work = 0.0;
  double seconds = 0.0;
  while (row.samples < samples && row.instances < kMaxInstancesPerCell) {
    GenConfig next = cfg;
    next.seed = cfg.seed + row.instances;
    const SearchResult result = row.instances == 0 && first
                                    ? solve_one(*first, engine, samples - row.samples, pool)
                                    : solve_one(generate(next), engine, samples - row.samples, pool);
    ++row.instances;
    row.wipeout = row.wipeout || result.stats.root.wipeout;
    row.samples += result.stats.per_assignment.size();
    for (const auto& s : result.stats.per_assignment) {
      work += static_cast<double>(s.work);
      seconds += s.seconds;
    }
  }
  if (row.samples == 0) return row;

  const double count = static_cast<double>(row.samples);
  (engine == EngineKind::rtac ? row.mean_recurrences : row.mean_revisions) = work / count;
  row.mean_time_per_assignment_ms = seconds * 1e3 / count;
  return row;
}

// Shortest text that reads back to the same double.
std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

}  // namespace

BenchRow run_cell(const GenConfig& cfg, EngineKind engine, std::size_t samples, WorkerPool& pool) {
  return run_on(nullptr, cfg, engine, samples, pool);
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg, WorkerPool& pool) {
  std::vector<BenchRow> rows;
  for (std::size_t n : cfg.vars) {
    for (double density : cfg.densities) {
      const GenConfig gen{n, cfg.d, density, cfg.tightness, cfg.seed};
      const CspInstance inst = generate(gen);
      for (EngineKind engine : cfg.engines) rows.push_back(run_on(&inst, gen, engine, cfg.samples, pool));
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    os << r.n << ',' << format_number(r.density) << ',' << r.d << ',' << format_number(r.tightness) << ','
       << r.seed << ',' << to_string(r.engine) << ',' << r.samples << ',' << optional_cell(r.mean_revisions) << ','
       << optional_cell(r.mean_recurrences) << ',' << optional_cell(r.mean_time_per_assignment_ms) << ','
       << (r.wipeout ? 1 : 0) << ',' << r.instances << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<BenchRow>& rows) {
  using ordered_json = nlohmann::ordered_json;
  const auto optional_value = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json doc;
  doc["meta"] = {{"heuristic", kHeuristicName},
                 {"value_order", "ascending"},
                 {"recurrences", "loop iterations per enforcement, final quiescent iteration included"},
                 {"revisions", "arc dequeues per enforcement"},
                 {"timing", "enforcement call only"},
                 {"prng", kPrngName},
                 {"instances", "seeds seed, seed+1, ... each solved to first solution or unsat"}};
  ordered_json list = ordered_json::array();
  for (const BenchRow& r : rows) {
    list.push_back({{"n", r.n},
                    {"density", r.density},
                    {"d", r.d},
                    {"tightness", r.tightness},
                    {"seed", r.seed},
                    {"engine", to_string(r.engine)},
                    {"samples", r.samples},
                    {"mean_revisions", optional_value(r.mean_revisions)},
                    {"mean_recurrences", optional_value(r.mean_recurrences)},
                    {"mean_time_per_assignment_ms", optional_value(r.mean_time_per_assignment_ms)},
                    {"wipeout", r.wipeout},
                    {"instances", r.instances}});
  }
  doc["rows"] = std::move(list);
  os << doc.dump(2) << '\n';
}

}  // namespace rtac
