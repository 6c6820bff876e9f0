#include "rtac/csp.hpp"

#include <algorithm>
#include <string>

namespace rtac {

CspInstance::CspInstance(std::size_t n, std::size_t d, std::vector<Constraint> constraints)
    : n_(n), d_(d), constraints_(std::move(constraints)), neighbors_(n), pair_index_(n * n, kNone) {
  if (n_ == 0 || d_ == 0) throw UsageError("CspInstance: n and d must be positive");
  std::sort(constraints_.begin(), constraints_.end(),
            [](const Constraint& l, const Constraint& r) { return std::pair(l.x, l.y) < std::pair(r.x, r.y); });

  masks_.reserve(constraints_.size());
  for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
    Constraint& c = constraints_[ci];
    if (!(c.x < c.y && c.y < n_)) {
      throw UsageError("CspInstance: constraint on (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                       ") needs 0 <= x < y < n");
    }
    if (pair_index_[c.x * n_ + c.y] != kNone) {
      throw UsageError("CspInstance: duplicate constraint on (" + std::to_string(c.x) + "," +
                       std::to_string(c.y) + ")");
    }
    std::sort(c.allowed.begin(), c.allowed.end());
    c.allowed.erase(std::unique(c.allowed.begin(), c.allowed.end()), c.allowed.end());

    std::vector<std::uint8_t> mask(d_ * d_, 0);
    for (const ValuePair& p : c.allowed) {
      if (p.a >= d_ || p.b >= d_) {
        throw UsageError("CspInstance: allowed pair (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                         ") outside domain of size " + std::to_string(d_));
      }
      mask[p.a * d_ + p.b] = 1;
    }
    masks_.push_back(std::move(mask));

    pair_index_[c.x * n_ + c.y] = static_cast<std::int32_t>(ci);
    pair_index_[c.y * n_ + c.x] = static_cast<std::int32_t>(ci);
    neighbors_[c.x].push_back(c.y);
    neighbors_[c.y].push_back(c.x);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

void CspInstance::check_var(std::size_t x) const {
  if (x >= n_) throw UsageError("variable " + std::to_string(x) + " out of range");
}

std::int32_t CspInstance::constraint_index(std::size_t x, std::size_t y) const {
  return pair_index_[x * n_ + y];
}

bool CspInstance::constrained(std::size_t x, std::size_t y) const {
  check_var(x);
  check_var(y);
  return constraint_index(x, y) != kNone;
}

bool CspInstance::allows(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const {
  const std::int32_t ci = constraint_index(x, y);
  if (ci == kNone) return true;
  const auto& mask = masks_[static_cast<std::size_t>(ci)];
  return x < y ? mask[a * d_ + b] != 0 : mask[b * d_ + a] != 0;
}

SupportSet CspInstance::support_set(std::size_t x, std::size_t y, std::size_t a) const {
  check_var(x);
  check_var(y);
  if (x == y) throw UsageError("support_set: x and y must differ");
  if (a >= d_) throw UsageError("support_set: value " + std::to_string(a) + " out of range");
  SupportSet s;
  for (std::size_t b = 0; b < d_; ++b) {
    if (allows(x, y, a, b)) s.values.push_back(b);
  }
  return s;
}

DomainMatrix DomainMatrix::full(std::size_t n, std::size_t d) {
  return DomainMatrix{Tensor({n, d}, 1)};
}

std::size_t DomainMatrix::cardinality(std::size_t x) const {
  const auto row = vars.data().subspan(x * d(), d());
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](auto c) { return c != 0; }));
}

std::pair<DomainMatrix, ConstraintTensor> build_tensors(const CspInstance& inst) {
  const std::size_t n = inst.n();
  const std::size_t d = inst.d();
  Tensor cons({n, n, d, d}, 1);
  auto cells = cons.data();
  const auto block = [&](std::size_t x, std::size_t y) { return cells.subspan(((x * n + y) * d) * d, d * d); };

  for (const Constraint& c : inst.constraints()) {
    auto forward = block(c.x, c.y);
    auto backward = block(c.y, c.x);
    std::fill(forward.begin(), forward.end(), 0);
    std::fill(backward.begin(), backward.end(), 0);
    for (const ValuePair& p : c.allowed) {
      forward[p.a * d + p.b] = 1;
      backward[p.b * d + p.a] = 1;
    }
  }
  return {DomainMatrix::full(n, d), ConstraintTensor{std::move(cons)}};
}

DomainSets::DomainSets(std::size_t n, std::size_t d, bool full)
    : n_(n), d_(d), bits_(n * d, full ? 1 : 0), sizes_(n, full ? d : 0) {}

DomainSets::DomainSets(const DomainMatrix& m) : DomainSets(m.n(), m.d(), false) {
  const auto cells = m.vars.data();
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t a = 0; a < d_; ++a) {
      if (cells[x * d_ + a] != 0) insert(x, a);
    }
  }
}

void DomainSets::insert(std::size_t x, std::size_t a) {
  auto& bit = bits_[x * d_ + a];
  if (bit == 0) {
    bit = 1;
    ++sizes_[x];
  }
}

void DomainSets::erase(std::size_t x, std::size_t a) {
  auto& bit = bits_[x * d_ + a];
  if (bit != 0) {
    bit = 0;
    --sizes_[x];
  }
}

bool DomainSets::any_empty() const {
  return std::any_of(sizes_.begin(), sizes_.end(), [](std::size_t s) { return s == 0; });
}

std::vector<std::size_t> DomainSets::values(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < d_; ++a) {
    if (contains(x, a)) out.push_back(a);
  }
  return out;
}

DomainMatrix DomainSets::to_matrix() const {
  Tensor t({n_, d_});
  std::copy(bits_.begin(), bits_.end(), t.data().begin());
  return DomainMatrix{std::move(t)};
}

bool is_arc_consistent(const CspInstance& inst, const DomainSets& domains) {
  for (std::size_t x = 0; x < inst.n(); ++x) {
    for (std::size_t y : inst.neighbors(x)) {
      for (std::size_t a = 0; a < inst.d(); ++a) {
        if (!domains.contains(x, a)) continue;
        bool supported = false;
        for (std::size_t b = 0; b < inst.d() && !supported; ++b) {
          supported = domains.contains(y, b) && inst.allows(x, y, a, b);
        }
        if (!supported) return false;
      }
    }
  }
  return true;
}

bool satisfies(const CspInstance& inst, const std::vector<std::size_t>& assignment) {
  if (assignment.size() != inst.n()) return false;
  for (std::size_t v : assignment) {
    if (v >= inst.d()) return false;
  }
  return std::all_of(inst.constraints().begin(), inst.constraints().end(), [&](const Constraint& c) {
    return std::binary_search(c.allowed.begin(), c.allowed.end(), ValuePair{assignment[c.x], assignment[c.y]});
  });
}

}  // namespace rtac
