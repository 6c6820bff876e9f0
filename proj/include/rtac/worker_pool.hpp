#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rtac {

/// Fixed-size pool of worker threads with static, contiguous partitioning.
///
/// parallel_for splits [0, count) into at most workers() contiguous blocks and
/// runs each block on exactly one thread. Every index is processed by the same
/// body regardless of the block layout, so kernels that write disjoint output
/// cells produce bit-identical results for any worker count.
///
/// A pool with one worker spawns no threads and runs inline. Submissions from
/// several threads are serialized.
class WorkerPool {
 public:
  using RangeFn = std::function<void(std::size_t begin, std::size_t end)>;

  explicit WorkerPool(std::size_t workers = 1);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  std::size_t workers() const { return workers_; }

  /// Runs body over [0, count). Blocks smaller than min_block are not split
  /// further, which keeps tiny kernels on the calling thread.
  void parallel_for(std::size_t count, const RangeFn& body,
                    std::size_t min_block = 1);

  /// Process-wide single-worker pool used as the default executor.
  static WorkerPool& serial();

  /// Worker count from the RTAC_WORKERS environment variable, or fallback.
  static std::size_t workers_from_env(std::size_t fallback = 1);

 private:
  void worker_loop(std::size_t slot);

  std::size_t workers_;
  std::vector<std::thread> threads_;

  std::mutex submit_mutex_;
  std::mutex mutex_;
  std::condition_variable wake_;
  std::condition_variable done_;
  const RangeFn* job_ = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
  std::size_t generation_ = 0;
  std::size_t pending_ = 0;
  bool stop_ = false;
};

}  // namespace rtac
