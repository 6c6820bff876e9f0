#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "rtac/csp.hpp"
#include "rtac/enforce.hpp"

namespace rtac {

/// Returns a copy of domains with row idx replaced by the unit row at val.
/// Throws UsageError if val is not in the domain of idx.
DomainMatrix assign(const DomainMatrix& domains, std::size_t idx, std::size_t val);

/// Unassigned variable with the smallest current domain, lowest index on ties.
/// Throws UsageError when every variable is assigned.
std::size_t select_variable(const DomainMatrix& domains, const std::vector<bool>& assigned);

inline constexpr std::string_view kHeuristicName = "min-domain/lowest-index";

/// One assign-and-enforce event of the search.
struct AssignmentSample {
  std::size_t work = 0;  // recurrences (rtac) or revisions (ac3)
  double seconds = 0.0;  // enforcement wall time
  bool consistent = true;
};

struct SearchStats {
  std::size_t assignments = 0;
  std::vector<AssignmentSample> per_assignment;
  std::size_t solutions_found = 0;
  EnforceStats root;
};

enum class SearchStatus { solution, unsat, budget_exhausted };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::unsat;
  std::vector<std::size_t> solution;  // filled when status == solution
  SearchStats stats;
};

/// Called when a node is entered and again when its subtree has been
/// abandoned, with the node's domains each time.
struct SearchObserver {
  std::function<void(std::size_t level, const DomainMatrix&)> on_enter;
  std::function<void(std::size_t level, const DomainMatrix&)> on_backtrack;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct SearchOptions {
  /// Caps the number of assignments.
  std::size_t budget = kUnlimited;
  /// When false the search counts solutions and keeps going until the budget
  /// or the tree is exhausted; solution holds the first one found.
  bool stop_at_first_solution = true;
  const SearchObserver* observer = nullptr;
};

/// Depth-first search maintaining arc consistency with the given engine. The
/// root enforces on all variables; each assignment enforces on the assigned
/// variable alone. Values are tried in ascending order.
SearchResult solve(const CspInstance& inst, Propagator& engine, const SearchOptions& options);

inline SearchResult solve(const CspInstance& inst, Propagator& engine, std::size_t budget = kUnlimited) {
  return solve(inst, engine, SearchOptions{budget, true, nullptr});
}

}  // namespace rtac
