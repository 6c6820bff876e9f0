#include "rtac/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

namespace rtac {

DomainMatrix assign(const DomainMatrix& domains, std::size_t idx, std::size_t val) {
  if (idx >= domains.n() || val >= domains.d()) throw UsageError("assign: index out of range");
  if (!domains.contains(idx, val)) {
    throw UsageError("assign: value " + std::to_string(val) + " is not in the domain of variable " +
                     std::to_string(idx));
  }
  // Extensionally the masked identity product I' * Vars followed by setting
  // Vars[idx][val] = 1.
  DomainMatrix out = domains;
  auto row = out.vars.data().subspan(idx * out.d(), out.d());
  std::fill(row.begin(), row.end(), 0);
  row[val] = 1;
  return out;
}

std::size_t select_variable(const DomainMatrix& domains, const std::vector<bool>& assigned) {
  std::size_t best = domains.n();
  std::size_t best_size = 0;
  for (std::size_t x = 0; x < domains.n(); ++x) {
    if (assigned[x]) continue;
    const std::size_t size = domains.cardinality(x);
    if (best == domains.n() || size < best_size) {
      best = x;
      best_size = size;
    }
  }
  if (best == domains.n()) throw UsageError("select_variable: all variables are assigned");
  return best;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::solution:
      return "solution";
    case SearchStatus::unsat:
      return "unsat";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

namespace {

class Dfs {
 public:
  Dfs(const CspInstance& inst, Propagator& engine, const SearchOptions& options, SearchResult& result)
      : inst_(inst), engine_(engine), budget_(options.budget), stop_at_first_(options.stop_at_first_solution),
        observer_(options.observer), result_(result), assigned_(inst.n(), false) {}

  bool budget_hit() const { return budget_hit_; }

  // True when the search must stop: a wanted solution or the budget.
  bool run(std::size_t level, const DomainMatrix& node) {
    if (observer_ && observer_->on_enter) observer_->on_enter(level, node);
    if (level == inst_.n()) {
      record_solution(node);
      return stop_at_first_;
    }
    const std::size_t idx = select_variable(node, assigned_);
    const auto row = node.vars.data().subspan(idx * node.d(), node.d());
    std::vector<std::size_t> values;
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a] != 0) values.push_back(a);
    }

    assigned_[idx] = true;
    for (std::size_t val : values) {
      if (result_.stats.assignments >= budget_) {
        budget_hit_ = true;
        return true;
      }
      const DomainMatrix child = assign(node, idx, val);
      const std::size_t changed[] = {idx};

      const auto start = std::chrono::steady_clock::now();
      EnforceOutcome outcome = engine_.enforce(child, changed);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

      ++result_.stats.assignments;
      result_.stats.per_assignment.push_back({engine_.work(outcome.stats), elapsed.count(), outcome.consistent});
      if (outcome.consistent && run(level + 1, outcome.domains)) return true;
    }
    assigned_[idx] = false;
    if (observer_ && observer_->on_backtrack) observer_->on_backtrack(level, node);
    return false;
  }

 private:
  void record_solution(const DomainMatrix& node) {
    std::vector<std::size_t> solution(inst_.n());
    for (std::size_t x = 0; x < inst_.n(); ++x) {
      for (std::size_t a = 0; a < inst_.d(); ++a) {
        if (node.contains(x, a)) {
          solution[x] = a;
          break;
        }
      }
    }
    if (result_.stats.solutions_found++ == 0) result_.solution = std::move(solution);
  }

  const CspInstance& inst_;
  Propagator& engine_;
  std::size_t budget_;
  bool stop_at_first_;
  bool budget_hit_ = false;
  const SearchObserver* observer_;
  SearchResult& result_;
  std::vector<bool> assigned_;
};

}  // namespace

SearchResult solve(const CspInstance& inst, Propagator& engine, const SearchOptions& options) {
  SearchResult result;
  std::vector<std::size_t> all(inst.n());
  std::iota(all.begin(), all.end(), 0);

  EnforceOutcome root = engine.enforce(DomainMatrix::full(inst.n(), inst.d()), all);
  result.stats.root = root.stats;
  if (!root.consistent) {
    result.status = SearchStatus::unsat;
    return result;
  }
  Dfs dfs(inst, engine, options, result);
  dfs.run(0, root.domains);
  if (result.stats.solutions_found > 0) {
    result.status = SearchStatus::solution;
  } else {
    result.status = dfs.budget_hit() ? SearchStatus::budget_exhausted : SearchStatus::unsat;
  }
  return result;
}

}  // namespace rtac
