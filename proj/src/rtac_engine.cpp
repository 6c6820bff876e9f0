#include "rtac/rtac_engine.hpp"

#include <limits>
#include <string>
#include <vector>

namespace rtac {

using kernel::Cell;
using kernel::Compare;

namespace {

std::vector<VarValue> removed_between(const DomainMatrix& before, const DomainMatrix& after) {
  std::vector<VarValue> removed;
  const auto old_cells = before.vars.data();
  const auto new_cells = after.vars.data();
  const std::size_t d = before.d();
  for (std::size_t i = 0; i < old_cells.size(); ++i) {
    if (old_cells[i] != 0 && new_cells[i] == 0) removed.push_back({i / d, i % d});
  }
  return removed;
}

}  // namespace

WorkBuffers::WorkBuffers(std::size_t n, std::size_t d)
    : zero_n({n}, 0), zero_nd({n, d}, 0), one_nnd({n, n, d}, 1) {}

DomainMatrix tensor_revise(const ConstraintTensor& cons, const DomainMatrix& vars,
                           std::span<const std::size_t> changed, const WorkBuffers& buffers,
                           WorkerPool& pool) {
  const std::size_t k = changed.size();
  if (k == 0) throw UsageError("tensor_revise: changed set must not be empty");
  if (k > std::numeric_limits<Cell>::max()) throw UsageError("tensor_revise: changed set too large");

  // Cons[*, changed, *, *] x Vars[changed, *, newaxis], fused into one gather.
  const Tensor selected = kernel::dim_expand(kernel::index_select(vars.vars, 0, changed), 2);
  Tensor supp = kernel::dim_reduct(kernel::gathered_matvec(cons.cons, changed, selected, pool), -1);

  // Clamp support counts to 1 so the per-value sum counts supported neighbors.
  const Tensor ones = kernel::narrow(buffers.one_nnd, 1, 0, k);
  supp = kernel::where_select(kernel::compare(supp, Compare::gt, 1, pool), ones, supp, pool);

  const Tensor supported = kernel::sum_along(supp, 1, pool);
  const Tensor lacking = kernel::compare(supported, Compare::ne, static_cast<Cell>(k), pool);
  return DomainMatrix{kernel::where_select(lacking, buffers.zero_nd, vars.vars, pool)};
}

EnforceOutcome tensor_ac(const ConstraintTensor& cons, const DomainMatrix& vars,
                         std::span<const std::size_t> changed, const WorkBuffers& buffers,
                         WorkerPool& pool) {
  EnforceOutcome out{true, vars, {}};
  Tensor previous = kernel::sum_along(out.domains.vars, 1, pool);
  std::vector<std::size_t> pending(changed.begin(), changed.end());

  while (!pending.empty()) {
    DomainMatrix next = tensor_revise(cons, out.domains, pending, buffers, pool);
    Tensor counts = kernel::sum_along(next.vars, 1, pool);

    auto removed = removed_between(out.domains, next);
    out.stats.total_removed += removed.size();
    out.stats.removed_per_iteration.push_back(std::move(removed));
    ++out.stats.recurrences;
    out.domains = std::move(next);

    if (kernel::any_true(kernel::compare(counts, Compare::eq, buffers.zero_n, pool))) {
      out.consistent = false;
      out.stats.wipeout = true;
      return out;
    }
    // Revision only removes values, so a changed domain has a changed size.
    pending = kernel::nonzero_positions(kernel::compare(counts, Compare::ne, previous, pool));
    previous = std::move(counts);
  }
  return out;
}

RtacEngine::RtacEngine(const CspInstance& inst, WorkerPool& pool)
    : initial_(DomainMatrix::full(inst.n(), inst.d())),
      cons_(build_tensors(inst).second),
      buffers_(inst.n(), inst.d()),
      pool_(&pool) {
  if (inst.n() > std::numeric_limits<Cell>::max() || inst.d() > std::numeric_limits<Cell>::max()) {
    throw UsageError("RtacEngine: instance exceeds cell range");
  }
}

EnforceOutcome RtacEngine::enforce(const DomainMatrix& domains, std::span<const std::size_t> changed) {
  for (std::size_t x : changed) {
    if (x >= domains.n()) throw UsageError("RtacEngine: changed variable " + std::to_string(x) + " out of range");
  }
  return tensor_ac(cons_, domains, changed, buffers_, *pool_);
}

}  // namespace rtac
