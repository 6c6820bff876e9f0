#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rtac/instance_gen.hpp"
#include "rtac/worker_pool.hpp"

namespace rtac {

enum class EngineKind { rtac, ac3, oracle };

std::string_view to_string(EngineKind kind);
/// Throws UsageError for unknown names.
EngineKind parse_engine(std::string_view name);

/// Aggregated statistics of one (instance, engine) benchmark cell.
struct BenchRow {
  std::size_t n = 0;
  double density = 0.0;
  std::size_t d = 0;
  double tightness = 0.0;
  std::uint64_t seed = 0;
  EngineKind engine = EngineKind::rtac;
  std::size_t samples = 0;
  std::optional<double> mean_revisions;    // ac3 only
  std::optional<double> mean_recurrences;  // rtac only
  std::optional<double> mean_time_per_assignment_ms;
  bool wipeout = false;  // root enforcement emptied a domain on some instance
  std::size_t instances = 0;
};

inline constexpr std::size_t kMaxInstancesPerCell = 1000;

/// Solves instances seeded seed, seed+1, ... under engine, each to its first
/// solution or proof of unsat, until samples assignments were made or
/// kMaxInstancesPerCell instances were used. Only rtac and ac3 are valid.
BenchRow run_cell(const GenConfig& cfg, EngineKind engine, std::size_t samples,
                  WorkerPool& pool = WorkerPool::serial());

struct BenchConfig {
  std::vector<std::size_t> vars;
  std::vector<double> densities;
  std::vector<EngineKind> engines;
  std::size_t d = 20;
  double tightness = 0.3;
  std::uint64_t seed = 0;
  std::size_t samples = 2000;
};

/// One row per (n, density, engine) in that nesting order.
std::vector<BenchRow> run_bench(const BenchConfig& cfg, WorkerPool& pool = WorkerPool::serial());

inline constexpr std::string_view kCsvHeader =
    "n,density,d,tightness,seed,engine,samples,mean_revisions,mean_recurrences,"
    "mean_time_per_assignment_ms,wipeout,instances";

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);
void write_json(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace rtac
