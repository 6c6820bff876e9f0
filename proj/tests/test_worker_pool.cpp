#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "rtac/worker_pool.hpp"

using rtac::WorkerPool;

TEST_CASE("parallel_for covers every index exactly once") {
  for (std::size_t workers : {1u, 2u, 3u, 8u}) {
    WorkerPool pool(workers);
    for (std::size_t count : {0u, 1u, 7u, 1000u}) {
      std::vector<int> hits(count, 0);
      pool.parallel_for(count, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) ++hits[i];
      });
      for (int h : hits) CHECK(h == 1);
    }
  }
}

TEST_CASE("small ranges stay on the calling thread") {
  WorkerPool pool(4);
  const auto caller = std::this_thread::get_id();
  bool same = true;
  pool.parallel_for(10, [&](std::size_t, std::size_t) { same = same && std::this_thread::get_id() == caller; }, 64);
  CHECK(same);
}

TEST_CASE("concurrent submitters are serialized") {
  WorkerPool pool(3);
  std::atomic<long> total{0};
  std::vector<std::thread> clients;
  for (int c = 0; c < 4; ++c) {
    clients.emplace_back([&] {
      for (int round = 0; round < 50; ++round) {
        pool.parallel_for(100, [&](std::size_t b, std::size_t e) { total += static_cast<long>(e - b); });
      }
    });
  }
  for (auto& t : clients) t.join();
  CHECK(total == 4 * 50 * 100);
}

TEST_CASE("worker count from environment") {
  ::setenv("RTAC_WORKERS", "6", 1);
  CHECK(WorkerPool::workers_from_env(1) == 6);
  ::setenv("RTAC_WORKERS", "zero", 1);
  CHECK(WorkerPool::workers_from_env(3) == 3);
  ::unsetenv("RTAC_WORKERS");
  CHECK(WorkerPool::workers_from_env(2) == 2);
}
