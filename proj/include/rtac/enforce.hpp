#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rtac/csp.hpp"

namespace rtac {

/// Work counters for one enforcement call.
struct EnforceStats {
  /// Loop iterations of the recurrent engine; zero for AC-3.
  std::size_t recurrences = 0;
  /// Arc dequeues of AC-3; zero for the recurrent engine.
  std::size_t revisions = 0;
  /// Values removed in each recurrence, sorted. One entry per recurrence.
  std::vector<std::vector<VarValue>> removed_per_iteration;
  std::size_t total_removed = 0;
  bool wipeout = false;
};

/// Result of an enforcement call. When consistent is false the domains are the
/// partial state at the moment a domain emptied.
struct EnforceOutcome {
  bool consistent = true;
  DomainMatrix domains;
  EnforceStats stats;
};

/// Arc-consistency engine interface used by the search.
class Propagator {
 public:
  virtual ~Propagator() = default;

  /// Enforces arc consistency after the domains of the variables in changed
  /// (ascending) were reduced.
  virtual EnforceOutcome enforce(const DomainMatrix& domains, std::span<const std::size_t> changed) = 0;

  /// Counter a benchmark attributes to one call.
  virtual std::size_t work(const EnforceStats& stats) const = 0;

  virtual std::string_view name() const = 0;
};

}  // namespace rtac
