#include "rtac/ac3.hpp"

#include <algorithm>
#include <string>

namespace rtac {

bool ArcQueue::push(std::size_t x, std::size_t y) {
  auto& flag = queued_[x * n_ + y];
  if (flag != 0) return false;
  flag = 1;
  arcs_.emplace_back(x, y);
  return true;
}

std::pair<std::size_t, std::size_t> ArcQueue::pop() {
  const auto arc = arcs_.front();
  arcs_.pop_front();
  queued_[arc.first * n_ + arc.second] = 0;
  return arc;
}

std::vector<std::size_t> revise(const CspInstance& inst, DomainSets& domains, std::size_t x, std::size_t y) {
  std::vector<std::size_t> removed;
  const std::size_t d = inst.d();
  for (std::size_t a = 0; a < d; ++a) {
    if (!domains.contains(x, a)) continue;
    bool supported = false;
    for (std::size_t b = 0; b < d && !supported; ++b) {
      supported = domains.contains(y, b) && inst.allows(x, y, a, b);
    }
    if (!supported) removed.push_back(a);
  }
  for (std::size_t a : removed) domains.erase(x, a);
  return removed;
}

Ac3Outcome ac3(const CspInstance& inst, DomainSets domains, std::span<const std::size_t> seeds) {
  std::vector<std::pair<std::size_t, std::size_t>> initial;
  for (std::size_t s : seeds) {
    if (s >= inst.n()) throw UsageError("ac3: seed " + std::to_string(s) + " out of range");
    for (std::size_t z : inst.neighbors(s)) initial.emplace_back(z, s);
  }
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());

  ArcQueue queue(inst.n());
  for (const auto& [z, s] : initial) queue.push(z, s);

  Ac3Outcome out{true, std::move(domains), {}};
  while (!queue.empty()) {
    const auto [x, y] = queue.pop();
    ++out.stats.revisions;
    const auto removed = revise(inst, out.domains, x, y);
    if (removed.empty()) continue;

    out.stats.total_removed += removed.size();
    if (out.domains.size(x) == 0) {
      out.consistent = false;
      out.stats.wipeout = true;
      return out;
    }
    for (std::size_t z : inst.neighbors(x)) {
      if (z != y) queue.push(z, x);
    }
  }
  return out;
}

EnforceOutcome Ac3Engine::enforce(const DomainMatrix& domains, std::span<const std::size_t> changed) {
  Ac3Outcome result = ac3(*inst_, DomainSets(domains), changed);
  return {result.consistent, result.domains.to_matrix(), std::move(result.stats)};
}

}  // namespace rtac
