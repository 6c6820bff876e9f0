#pragma once

#include <cstddef>
#include <span>

#include "rtac/csp.hpp"
#include "rtac/enforce.hpp"
#include "rtac/worker_pool.hpp"

namespace rtac {

/// Constant helper tensors for the revise step: zero^n, zero^{nd}, one^{nnd}.
struct WorkBuffers {
  Tensor zero_n;
  Tensor zero_nd;
  Tensor one_nnd;

  WorkBuffers(std::size_t n, std::size_t d);
};

/// One simultaneous revision of every variable against the variables in
/// changed. A value survives iff it keeps at least one support in the current
/// domain of every changed variable.
DomainMatrix tensor_revise(const ConstraintTensor& cons, const DomainMatrix& vars,
                           std::span<const std::size_t> changed, const WorkBuffers& buffers,
                           WorkerPool& pool = WorkerPool::serial());

/// Recurrent enforcement: revise against the changed set, recompute which
/// variables lost values, repeat until nothing changes or a domain empties.
EnforceOutcome tensor_ac(const ConstraintTensor& cons, const DomainMatrix& vars,
                         std::span<const std::size_t> changed, const WorkBuffers& buffers,
                         WorkerPool& pool = WorkerPool::serial());

/// Owns the dense encoding of an instance and runs tensor_ac on it.
class RtacEngine final : public Propagator {
 public:
  explicit RtacEngine(const CspInstance& inst, WorkerPool& pool = WorkerPool::serial());

  EnforceOutcome enforce(const DomainMatrix& domains, std::span<const std::size_t> changed) override;
  std::size_t work(const EnforceStats& stats) const override { return stats.recurrences; }
  std::string_view name() const override { return "rtac"; }

  const ConstraintTensor& constraints() const { return cons_; }
  const DomainMatrix& initial_domains() const { return initial_; }

 private:
  DomainMatrix initial_;
  ConstraintTensor cons_;
  WorkBuffers buffers_;
  WorkerPool* pool_;
};

}  // namespace rtac
