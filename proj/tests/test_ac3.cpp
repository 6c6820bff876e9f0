#include <doctest.h>

#include "rtac/ac3.hpp"
#include "rtac/oracle.hpp"
#include "test_support.hpp"

using namespace rtac;
using testing::iota;
using testing::rows;

TEST_CASE("ArcQueue suppresses duplicates and keeps FIFO order") {
  ArcQueue q(3);
  CHECK(q.push(0, 1));
  CHECK(q.push(2, 1));
  CHECK_FALSE(q.push(0, 1));
  CHECK(q.size() == 2);
  CHECK(q.pop() == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(q.push(0, 1));
  CHECK(q.pop() == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(q.pop() == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(q.empty());
}

TEST_CASE("revise") {
  SUBCASE("EQ2 drops the unsupported value") {
    const CspInstance inst = testing::eq2();
    DomainSets domains(2, 2);
    // Expected from support sets: only a=1 of x0 has no support.
    CHECK(inst.support_set(0, 1, 1).empty());
    CHECK(revise(inst, domains, 0, 1) == std::vector<std::size_t>{1});
    CHECK(domains.values(0) == std::vector<std::size_t>{0});
  }
  SUBCASE("equality keeps everything") {
    const CspInstance inst(2, 3, {{0, 1, {{0, 0}, {1, 1}, {2, 2}}}});
    DomainSets domains(2, 3);
    CHECK(revise(inst, domains, 0, 1).empty());
    CHECK(revise(inst, domains, 1, 0).empty());
  }
  SUBCASE("empty neighbor domain removes everything") {
    const CspInstance inst(2, 3, {{0, 1, {{0, 0}, {1, 1}, {2, 2}}}});
    DomainSets domains(2, 3);
    for (std::size_t b = 0; b < 3; ++b) domains.erase(1, b);
    CHECK(revise(inst, domains, 0, 1) == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_CASE("ac3 on hand-traced instances") {
  SUBCASE("EQ2: (0,1) removes x0=1, (1,0) removes x1=1, nothing is requeued") {
    const auto out = ac3(testing::eq2(), DomainSets(2, 2), iota(2));
    CHECK(out.consistent);
    CHECK(out.domains.to_matrix() == rows({{1, 0}, {1, 0}}));
    CHECK(out.stats.revisions == 2);
    CHECK(out.stats.total_removed == 2);
  }
  SUBCASE("PATH3: queue (0,1) (1,0) (1,2) (2,1) (0,1)") {
    const auto out = ac3(testing::path3(), DomainSets(3, 2), iota(3));
    CHECK(out.consistent);
    CHECK(out.domains.to_matrix() == rows({{1, 0}, {1, 0}, {1, 0}}));
    CHECK(out.stats.revisions == 5);
  }
  SUBCASE("WIPE2") {
    const auto out = ac3(testing::wipe2(), DomainSets(2, 1), iota(2));
    CHECK_FALSE(out.consistent);
    CHECK(out.stats.wipeout);
  }
  SUBCASE("unconstrained instance has no arcs") {
    const auto out = ac3(CspInstance(4, 3, {}), DomainSets(4, 3), iota(4));
    CHECK(out.consistent);
    CHECK(out.stats.revisions == 0);
    CHECK(out.domains == DomainSets(4, 3));
  }
  SUBCASE("seeding only revises neighbors against the seed") {
    const CspInstance inst = testing::path3();
    const std::vector<std::size_t> seeds{2};
    const auto out = ac3(inst, DomainSets(3, 2), seeds);
    // (1,2) removes x1=1 and queues (0,1), which removes x0=1.
    CHECK(out.stats.revisions == 2);
    CHECK(out.domains.to_matrix() == rows({{1, 0}, {1, 0}, {1, 1}}));
  }
  SUBCASE("bad seed") {
    const std::vector<std::size_t> seeds{3};
    CHECK_THROWS_AS(ac3(testing::path3(), DomainSets(3, 2), seeds), UsageError);
  }
}

TEST_CASE("ac3 agrees with the oracle and is idempotent") {
  for (const GenConfig& cfg : testing::random_configs(300, 1234)) {
    const CspInstance inst = generate(cfg);
    const auto out = ac3(inst, DomainSets(inst.n(), inst.d()), iota(inst.n()));
    const auto ref = oracle::fixpoint_ac(inst, DomainSets(inst.n(), inst.d()));
    REQUIRE(out.consistent == !ref.wiped_out());
    if (!out.consistent) continue;
    REQUIRE(out.domains == ref.domains);
    const auto again = ac3(inst, out.domains, iota(inst.n()));
    REQUIRE(again.stats.total_removed == 0);
    REQUIRE(again.domains == out.domains);
  }
}

TEST_CASE("Ac3Engine adapter") {
  const CspInstance inst = testing::path3();
  Ac3Engine engine(inst);
  const auto out = engine.enforce(DomainMatrix::full(3, 2), iota(3));
  CHECK(out.consistent);
  CHECK(engine.work(out.stats) == 5);
  CHECK(out.stats.recurrences == 0);
  CHECK(engine.name() == "ac3");
}
