#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtac/worker_pool.hpp"

namespace rtac {

/// Raised when a caller violates an operation's shape or index precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace kernel {

/// Element type. Boolean-role tensors hold 0/1; count tensors hold values up
/// to the largest domain size or changed-set length.
using Cell = std::uint16_t;
using Shape = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

/// Dense row-major tensor of small non-negative integers.
class Tensor {
 public:
  /// Rank-0 scalar holding zero.
  Tensor() : data_(1, 0) {}
  explicit Tensor(Shape shape, Cell fill = 0);
  Tensor(Shape shape, std::vector<Cell> data);

  static Tensor vector(std::initializer_list<Cell> values);
  static Tensor matrix(std::initializer_list<std::initializer_list<Cell>> rows);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }

  std::span<const Cell> data() const { return data_; }
  std::span<Cell> data() { return data_; }

  Cell at(std::initializer_list<std::size_t> index) const { return data_[offset(index)]; }
  Cell& at(std::initializer_list<std::size_t> index) { return data_[offset(index)]; }

  /// Same data, new shape of equal element count.
  Tensor reshaped(Shape shape) const&;
  Tensor reshaped(Shape shape) &&;

  bool operator==(const Tensor& other) const = default;

 private:
  std::size_t offset(std::initializer_list<std::size_t> index) const;

  Shape shape_;
  std::vector<Cell> data_;
};

std::size_t element_count(const Shape& shape);
std::string shape_string(const Shape& shape);

/// Maps a possibly negative axis into [0, rank). Throws UsageError.
std::size_t normalize_axis(std::ptrdiff_t axis, std::size_t rank);

/// Integer sum over one axis; the result drops that axis.
Tensor sum_along(const Tensor& t, std::ptrdiff_t axis, WorkerPool& pool = WorkerPool::serial());

/// True iff some cell is nonzero.
bool any_true(const Tensor& t);

/// Multi-indices of nonzero cells in ascending row-major order.
std::vector<Index> nonzero_indices(const Tensor& t);

/// Rank-1 shortcut of nonzero_indices returning plain positions.
std::vector<std::size_t> nonzero_positions(const Tensor& t);

/// Inserts a size-1 axis at position axis, 0 <= axis <= rank.
Tensor dim_expand(const Tensor& t, std::ptrdiff_t axis);

/// Removes a size-1 axis; negative axes count from the end.
Tensor dim_reduct(const Tensor& t, std::ptrdiff_t axis);

/// Cellwise cond ? x : y. All three shapes must match exactly.
Tensor where_select(const Tensor& cond, const Tensor& x, const Tensor& y,
                    WorkerPool& pool = WorkerPool::serial());

enum class Compare { eq, ne, gt };

/// Cellwise 0/1 comparison against a scalar.
Tensor compare(const Tensor& t, Compare op, Cell scalar, WorkerPool& pool = WorkerPool::serial());

/// Cellwise 0/1 comparison of two same-shaped tensors.
Tensor compare(const Tensor& lhs, Compare op, const Tensor& rhs,
               WorkerPool& pool = WorkerPool::serial());

/// out[i,j,:,0] = a[i,j,:,:] * v[j,:,0] for a of shape [n,k,d,e] and v of
/// shape [k,e,1]; v is shared across the leading axis.
Tensor batched_matvec(const Tensor& a, const Tensor& v, WorkerPool& pool = WorkerPool::serial());

/// batched_matvec(index_select(a, 1, columns), v) without materializing the
/// gathered slice of a.
Tensor gathered_matvec(const Tensor& a, std::span<const std::size_t> columns, const Tensor& v,
                       WorkerPool& pool = WorkerPool::serial());

/// Gathers slices along axis in the order given by idx.
Tensor index_select(const Tensor& t, std::ptrdiff_t axis, std::span<const std::size_t> idx);

/// Contiguous slice [start, start + length) along axis.
Tensor narrow(const Tensor& t, std::ptrdiff_t axis, std::size_t start, std::size_t length);

}  // namespace kernel
}  // namespace rtac
