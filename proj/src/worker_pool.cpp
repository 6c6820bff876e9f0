#include "rtac/worker_pool.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rtac {

WorkerPool::WorkerPool(std::size_t workers) : workers_(std::max<std::size_t>(1, workers)) {
  // Slot 0 is the submitting thread.
  threads_.reserve(workers_ - 1);
  for (std::size_t slot = 1; slot < workers_; ++slot) {
    threads_.emplace_back([this, slot] { worker_loop(slot); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard lock(mutex_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

void WorkerPool::parallel_for(std::size_t count, const RangeFn& body, std::size_t min_block) {
  if (count == 0) return;
  min_block = std::max<std::size_t>(1, min_block);
  const std::size_t max_blocks = (count + min_block - 1) / min_block;
  const std::size_t nblocks = std::min(workers_, max_blocks);
  if (nblocks <= 1) {
    body(0, count);
    return;
  }

  std::lock_guard submit(submit_mutex_);
  {
    std::lock_guard lock(mutex_);
    blocks_.assign(workers_, {0, 0});
    const std::size_t base = count / nblocks;
    const std::size_t extra = count % nblocks;
    std::size_t begin = 0;
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::size_t len = base + (b < extra ? 1 : 0);
      blocks_[b] = {begin, begin + len};
      begin += len;
    }
    job_ = &body;
    pending_ = workers_ - 1;
    ++generation_;
  }
  wake_.notify_all();

  body(blocks_[0].first, blocks_[0].second);

  std::unique_lock lock(mutex_);
  done_.wait(lock, [this] { return pending_ == 0; });
  job_ = nullptr;
}

void WorkerPool::worker_loop(std::size_t slot) {
  std::size_t seen = 0;
  for (;;) {
    const RangeFn* job = nullptr;
    std::pair<std::size_t, std::size_t> block;
    {
      std::unique_lock lock(mutex_);
      wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
      block = blocks_[slot];
    }
    if (block.first < block.second) (*job)(block.first, block.second);
    {
      std::lock_guard lock(mutex_);
      if (--pending_ == 0) done_.notify_one();
    }
  }
}

WorkerPool& WorkerPool::serial() {
  static WorkerPool pool(1);
  return pool;
}

std::size_t WorkerPool::workers_from_env(std::size_t fallback) {
  const char* raw = std::getenv("RTAC_WORKERS");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(raw, &pos);
    if (pos != std::string(raw).size() || value == 0) return fallback;
    return value;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace rtac
