#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "rtac/csp.hpp"
#include "rtac/enforce.hpp"

namespace rtac {

/// FIFO of directed arcs (x, y) with duplicate suppression.
class ArcQueue {
 public:
  explicit ArcQueue(std::size_t n) : n_(n), queued_(n * n, 0) {}

  /// Appends (x, y) unless it is already waiting. Returns whether it was added.
  bool push(std::size_t x, std::size_t y);
  std::pair<std::size_t, std::size_t> pop();
  bool empty() const { return arcs_.empty(); }
  std::size_t size() const { return arcs_.size(); }

 private:
  std::size_t n_;
  std::deque<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<std::uint8_t> queued_;
};

/// Removes from x every value without support in the domain of y on c_xy.
/// Returns the removed values of x in ascending order.
std::vector<std::size_t> revise(const CspInstance& inst, DomainSets& domains, std::size_t x, std::size_t y);

struct Ac3Outcome {
  bool consistent = true;
  DomainSets domains;
  EnforceStats stats;
};

/// AC-3 seeded with the arcs (z, s) for every seed s and constrained neighbor
/// z, in ascending (z, s) order. A revision of (x, y) that shrinks x queues
/// (z, x) for its other neighbors z != y.
Ac3Outcome ac3(const CspInstance& inst, DomainSets domains, std::span<const std::size_t> seeds);

/// Propagator adapter for the search.
class Ac3Engine final : public Propagator {
 public:
  explicit Ac3Engine(const CspInstance& inst) : inst_(&inst) {}

  EnforceOutcome enforce(const DomainMatrix& domains, std::span<const std::size_t> changed) override;
  std::size_t work(const EnforceStats& stats) const override { return stats.revisions; }
  std::string_view name() const override { return "ac3"; }

 private:
  const CspInstance* inst_;
};

}  // namespace rtac
