#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rtac/tensor.hpp"

namespace rtac {

using kernel::Tensor;

/// A value a of variable x.
struct VarValue {
  std::size_t var = 0;
  std::size_t value = 0;

  auto operator<=>(const VarValue&) const = default;
};

struct ValuePair {
  std::size_t a = 0;
  std::size_t b = 0;

  auto operator<=>(const ValuePair&) const = default;
};

/// Binary relation between x < y given as its allowed (x-value, y-value) pairs.
struct Constraint {
  std::size_t x = 0;
  std::size_t y = 0;
  std::vector<ValuePair> allowed;

  bool operator==(const Constraint&) const = default;
};

/// Values of y supporting some (x, a), ascending.
struct SupportSet {
  std::vector<std::size_t> values;

  bool empty() const { return values.empty(); }
  bool operator==(const SupportSet&) const = default;
};

/// Immutable binary CSP over n variables sharing the domain {0, ..., d-1}.
///
/// The sparse constraint list is the source of truth. Constraints are kept
/// sorted by (x, y) with each allowed list sorted and deduplicated. Pairs
/// without a declared constraint behave as the universal relation.
class CspInstance {
 public:
  /// Validates and normalizes. Throws UsageError on out-of-range indices,
  /// x >= y, or a repeated variable pair.
  CspInstance(std::size_t n, std::size_t d, std::vector<Constraint> constraints);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Constrained neighbors of x in ascending order.
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return neighbors_.at(x); }

  bool constrained(std::size_t x, std::size_t y) const;

  /// Whether x=a, y=b is allowed. Either orientation; universal when the pair
  /// carries no constraint.
  bool allows(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const;

  /// Values of y supporting (x, a) on c_xy.
  SupportSet support_set(std::size_t x, std::size_t y, std::size_t a) const;

  bool operator==(const CspInstance& other) const {
    return n_ == other.n_ && d_ == other.d_ && constraints_ == other.constraints_;
  }

 private:
  static constexpr std::int32_t kNone = -1;

  std::int32_t constraint_index(std::size_t x, std::size_t y) const;
  void check_var(std::size_t x) const;

  std::size_t n_;
  std::size_t d_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> neighbors_;
  // n*n lookup into constraints_, symmetric.
  std::vector<std::int32_t> pair_index_;
  // Per constraint, a d*d row-major mask indexed [a_x][b_y].
  std::vector<std::vector<std::uint8_t>> masks_;
};

/// Live domains of all variables as an n x d 0/1 tensor.
struct DomainMatrix {
  Tensor vars;

  static DomainMatrix full(std::size_t n, std::size_t d);

  std::size_t n() const { return vars.dim(0); }
  std::size_t d() const { return vars.dim(1); }
  bool contains(std::size_t x, std::size_t a) const { return vars.data()[x * d() + a] != 0; }
  std::size_t cardinality(std::size_t x) const;

  bool operator==(const DomainMatrix&) const = default;
};

/// All relations as an n x n x d x d 0/1 tensor with universal blocks for
/// unconstrained and diagonal pairs.
struct ConstraintTensor {
  Tensor cons;

  bool operator==(const ConstraintTensor&) const = default;
};

/// Full domains plus the dense relation tensor.
std::pair<DomainMatrix, ConstraintTensor> build_tensors(const CspInstance& inst);

/// Per-variable value sets; the set view of a DomainMatrix.
class DomainSets {
 public:
  DomainSets(std::size_t n, std::size_t d, bool full = true);
  explicit DomainSets(const DomainMatrix& m);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

  bool contains(std::size_t x, std::size_t a) const { return bits_[x * d_ + a] != 0; }
  void insert(std::size_t x, std::size_t a);
  void erase(std::size_t x, std::size_t a);
  std::size_t size(std::size_t x) const { return sizes_[x]; }
  bool any_empty() const;
  std::vector<std::size_t> values(std::size_t x) const;

  DomainMatrix to_matrix() const;

  bool operator==(const DomainSets&) const = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::size_t> sizes_;
};

/// Whether every remaining value has a remaining support on every declared
/// constraint of its variable.
bool is_arc_consistent(const CspInstance& inst, const DomainSets& domains);

/// Whether a complete assignment satisfies every declared constraint.
bool satisfies(const CspInstance& inst, const std::vector<std::size_t>& assignment);

}  // namespace rtac
