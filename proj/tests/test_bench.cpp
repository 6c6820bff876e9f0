#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rtac/bench.hpp"

using namespace rtac;

namespace {

bool same_counters(const BenchRow& a, const BenchRow& b) {
  return a.n == b.n && a.density == b.density && a.d == b.d && a.tightness == b.tightness && a.seed == b.seed &&
         a.engine == b.engine && a.samples == b.samples && a.mean_revisions == b.mean_revisions &&
         a.mean_recurrences == b.mean_recurrences && a.wipeout == b.wipeout && a.instances == b.instances;
}

}  // namespace

TEST_CASE("engine names") {
  CHECK(parse_engine("rtac") == EngineKind::rtac);
  CHECK(parse_engine("ac3") == EngineKind::ac3);
  CHECK(parse_engine("oracle") == EngineKind::oracle);
  CHECK_THROWS_AS(parse_engine("ac4"), UsageError);
}

TEST_CASE("run_cell populates the engine's counter only") {
  const GenConfig cfg{10, 20, 1.0, 0.3, 3};
  const BenchRow r = run_cell(cfg, EngineKind::rtac, 10);
  CHECK(r.samples == 10);
  CHECK(r.mean_recurrences.has_value());
  CHECK_FALSE(r.mean_revisions.has_value());
  CHECK(r.mean_time_per_assignment_ms.has_value());
  CHECK(*r.mean_recurrences >= 1.0);

  const BenchRow a = run_cell(cfg, EngineKind::ac3, 10);
  CHECK(a.samples == 10);
  CHECK(a.mean_revisions.has_value());
  CHECK_FALSE(a.mean_recurrences.has_value());

  CHECK_THROWS_AS(run_cell(cfg, EngineKind::oracle, 10), UsageError);
  CHECK_THROWS_AS(run_cell(cfg, EngineKind::rtac, 0), UsageError);
}

TEST_CASE("root wipeout is flagged with zero samples") {
  const BenchRow r = run_cell({4, 2, 1.0, 1.0, 1}, EngineKind::rtac, 10);
  CHECK(r.wipeout);
  CHECK(r.samples == 0);
  CHECK(r.instances == kMaxInstancesPerCell);
  CHECK_FALSE(r.mean_recurrences.has_value());
}

TEST_CASE("counter columns are stable across runs and worker counts") {
  BenchConfig cfg;
  cfg.vars = {12, 20};
  cfg.densities = {0.25, 1.0};
  cfg.engines = {EngineKind::rtac, EngineKind::ac3};
  cfg.d = 8;
  cfg.samples = 40;
  cfg.seed = 5;
  const auto first = run_bench(cfg);
  WorkerPool pool(4);
  const auto second = run_bench(cfg, pool);
  REQUIRE(first.size() == 8);
  REQUIRE(second.size() == 8);
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(same_counters(first[i], second[i]));
  CHECK(first[0].engine == EngineKind::rtac);
  CHECK(first[1].engine == EngineKind::ac3);
  CHECK(first[1].density == 0.25);
  CHECK(first[2].density == 1.0);
}

TEST_CASE("csv and json output") {
  BenchRow r;
  r.n = 10;
  r.density = 0.25;
  r.d = 20;
  r.tightness = 0.3;
  r.seed = 7;
  r.engine = EngineKind::ac3;
  r.samples = 4;
  r.mean_revisions = 12.5;
  r.mean_time_per_assignment_ms = 0.5;
  r.instances = 2;

  std::ostringstream csv;
  write_csv(csv, {r});
  CHECK(csv.str() ==
        "n,density,d,tightness,seed,engine,samples,mean_revisions,mean_recurrences,mean_time_per_assignment_ms,"
        "wipeout,instances\n10,0.25,20,0.3,7,ac3,4,12.5,,0.5,0,2\n");

  std::ostringstream js;
  write_json(js, {r});
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["meta"]["heuristic"] == "min-domain/lowest-index");
  CHECK(doc["rows"][0]["mean_revisions"] == 12.5);
  CHECK(doc["rows"][0]["mean_recurrences"].is_null());
  CHECK(doc["rows"][0]["engine"] == "ac3");
}

TEST_CASE("a cell draws further instances until the sample count is met") {
  // A loose instance is solved in n assignments, so 25 samples need 3 of them.
  const BenchRow r = run_cell({10, 4, 0.2, 0.0, 9}, EngineKind::rtac, 25);
  CHECK(r.samples == 25);
  CHECK(r.instances == 3);
  CHECK(*r.mean_recurrences >= 1.0);
}
