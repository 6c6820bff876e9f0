#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rtac/cli.hpp"
#include "rtac/instance_io.hpp"
#include "test_support.hpp"

using namespace rtac;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / "rtac_cli_test";
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen") {
  TempDir dir;
  const auto a = run({"gen", "--vars", "100", "--dom", "20", "--density", "0.25", "--tightness", "0.3", "--seed", "7",
                      "-o", dir.file("a.json")});
  REQUIRE(a.code == 0);
  CHECK(a.out == dir.file("a.json") + "\n");
  const auto doc = read_instance_file(dir.file("a.json"));
  CHECK(doc.instance.n() == 100);
  CHECK(doc.gen->seed == 7);

  run({"gen", "--vars", "100", "--dom", "20", "--density", "0.25", "--tightness", "0.3", "--seed", "7", "-o",
       dir.file("b.json")});
  CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));

  const auto bad = run({"gen", "--vars", "10", "--density", "1.5"});
  CHECK(bad.code == cli::kUsage);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"gen", "--density", "0.5"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);

  const auto piped = run({"gen", "--vars", "3", "--dom", "2", "--density", "1", "--seed", "1"});
  CHECK(piped.code == 0);
  CHECK(parse_instance(piped.out).instance.constraints().size() == 3);
}

TEST_CASE("ac") {
  TempDir dir;
  write_instance_file(dir.file("eq2.json"), testing::eq2());
  write_instance_file(dir.file("wipe2.json"), testing::wipe2());

  const auto rtac = run({"ac", dir.file("eq2.json"), "--engine", "rtac"});
  REQUIRE(rtac.code == 0);
  const auto r = nlohmann::json::parse(rtac.out);
  CHECK(r["consistent"] == true);
  CHECK(r["removed"] == 2);
  CHECK(r["recurrences"] == 2);
  CHECK(r.contains("time_ms"));

  const auto oracle = nlohmann::json::parse(run({"ac", dir.file("eq2.json"), "--engine", "oracle"}).out);
  CHECK(oracle["consistent"] == true);
  CHECK(oracle["removed"] == 2);

  const auto ac3 = nlohmann::json::parse(run({"ac", dir.file("eq2.json"), "--engine", "ac3"}).out);
  CHECK(ac3["removed"] == 2);
  CHECK(ac3["revisions"] == 2);

  for (const char* engine : {"rtac", "ac3", "oracle"}) {
    const auto w = run({"ac", dir.file("wipe2.json"), "--engine", engine});
    CHECK(w.code == cli::kInconsistent);
    CHECK(nlohmann::json::parse(w.out)["consistent"] == false);
  }

  std::ofstream(dir.file("broken.json")) << "{\"n\": 2";
  CHECK(run({"ac", dir.file("broken.json")}).code == cli::kUsage);
  CHECK(run({"ac", dir.file("missing.json")}).code == cli::kUsage);
  CHECK(run({"ac", dir.file("eq2.json"), "--engine", "ac4"}).code == cli::kUsage);
}

TEST_CASE("solve") {
  TempDir dir;
  write_instance_file(dir.file("eq2.json"), testing::eq2());
  write_instance_file(dir.file("wipe2.json"), testing::wipe2());

  for (const char* engine : {"rtac", "ac3"}) {
    const auto s = run({"solve", dir.file("eq2.json"), "--engine", engine});
    CHECK(s.code == 0);
    const auto doc = nlohmann::json::parse(s.out);
    CHECK(doc["status"] == "solution");
    CHECK(doc["solution"] == nlohmann::json::array({0, 0}));
    CHECK(run({"solve", dir.file("wipe2.json"), "--engine", engine}).code == cli::kInconsistent);
  }
  run({"gen", "--vars", "30", "--dom", "6", "--density", "0.8", "--tightness", "0.2", "--seed", "3", "-o",
       dir.file("g.json")});
  const auto capped = nlohmann::json::parse(run({"solve", dir.file("g.json"), "--budget", "1"}).out);
  CHECK(capped["assignments"] == 1);
}

TEST_CASE("bench") {
  TempDir dir;
  const auto csv = run({"bench", "--vars", "10", "--density", "1.0", "--engine", "rtac", "--samples", "10"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header.rfind("n,density,d,tightness,seed,engine,samples,mean_revisions,mean_recurrences,", 0) == 0);
  CHECK(row.rfind("10,1,20,0.3,1,rtac,10,,", 0) == 0);
  CHECK_FALSE(std::getline(lines, extra));

  const auto both = run({"bench", "--vars", "10,12", "--density", "0.5,1", "--engine", "rtac,ac3", "--samples",
                         "5", "--format", "json", "--workers", "2", "-o", dir.file("b.json")});
  REQUIRE(both.code == 0);
  const auto doc = nlohmann::json::parse(slurp(dir.file("b.json")));
  CHECK(doc["rows"].size() == 8);
  CHECK(doc["rows"][1]["engine"] == "ac3");
  CHECK(doc["rows"][1]["mean_recurrences"].is_null());

  CHECK(run({"bench", "--samples", "0"}).code == cli::kUsage);
  CHECK(run({"bench", "--engine", "oracle"}).code == cli::kUsage);
  CHECK(run({"bench", "--density", "2"}).code == cli::kUsage);
}
