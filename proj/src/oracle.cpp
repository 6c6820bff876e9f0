#include "rtac/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace rtac::oracle {

FixpointResult fixpoint_ac(const CspInstance& inst, const DomainSets& domains) {
  FixpointResult result{domains, {}};
  for (;;) {
    std::vector<VarValue> collected;
    for (std::size_t x = 0; x < inst.n(); ++x) {
      for (std::size_t a = 0; a < inst.d(); ++a) {
        if (!result.domains.contains(x, a)) continue;
        for (const Constraint& c : inst.constraints()) {
          if (c.x != x && c.y != x) continue;
          const std::size_t y = c.x == x ? c.y : c.x;
          const SupportSet supports = inst.support_set(x, y, a);
          const bool all_gone = std::none_of(supports.values.begin(), supports.values.end(),
                                             [&](std::size_t b) { return result.domains.contains(y, b); });
          if (all_gone) {
            collected.push_back({x, a});
            break;
          }
        }
      }
    }
    if (collected.empty()) break;
    // Every value of a round is judged against the previous round's domains.
    for (const VarValue& v : collected) result.domains.erase(v.var, v.value);
    result.trace.iterations.push_back(std::move(collected));
  }
  return result;
}

std::vector<std::vector<std::size_t>> enumerate_solutions(const CspInstance& inst, std::size_t limit) {
  const double space = std::pow(static_cast<double>(inst.d()), static_cast<double>(inst.n()));
  if (space > kEnumerationLimit) {
    throw UsageError("enumerate_solutions: search space too large to enumerate");
  }
  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> assignment(inst.n(), 0);
  const auto total = static_cast<std::size_t>(std::llround(space));
  for (std::size_t code = 0; code < total && solutions.size() < limit; ++code) {
    // Most significant digit is variable 0, so codes ascend lexicographically.
    std::size_t rest = code;
    for (std::size_t x = inst.n(); x-- > 0;) {
      assignment[x] = rest % inst.d();
      rest /= inst.d();
    }
    if (satisfies(inst, assignment)) solutions.push_back(assignment);
  }
  return solutions;
}

}  // namespace rtac::oracle
