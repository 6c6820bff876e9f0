#pragma once

#include <cstddef>
#include <vector>

#include "rtac/csp.hpp"

namespace rtac::oracle {

/// Values collected by each round of the plain fixpoint recurrence.
struct RemovalTrace {
  std::vector<std::vector<VarValue>> iterations;
};

struct FixpointResult {
  DomainSets domains;
  RemovalTrace trace;

  /// True when some variable ended with an empty domain.
  bool wiped_out() const { return domains.any_empty(); }
};

/// Arc-consistency closure by exhaustive rounds. Each round collects, against
/// the domains left by the previous round, every present (x, a) whose support
/// set on some declared c_xy has no value left; rounds stop when one collects
/// nothing. Empty domains are reported in the result, never thrown.
FixpointResult fixpoint_ac(const CspInstance& inst, const DomainSets& domains);

/// Largest number of complete assignments enumerate_solutions will scan.
inline constexpr double kEnumerationLimit = 1e7;

/// Every complete assignment satisfying all constraints in lexicographic
/// order, truncated at limit. Throws UsageError when d^n exceeds the
/// enumeration limit.
std::vector<std::vector<std::size_t>> enumerate_solutions(const CspInstance& inst, std::size_t limit);

}  // namespace rtac::oracle
