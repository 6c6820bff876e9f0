#include "rtac/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace rtac::kernel {

namespace {

constexpr std::size_t kElementwiseBlock = 4096;
constexpr std::uint32_t kCellMax = std::numeric_limits<Cell>::max();

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  require(a.shape() == b.shape(), std::string(op) + ": shape mismatch " + shape_string(a.shape()) +
                                      " vs " + shape_string(b.shape()));
}

// Splits shape around axis into (outer, extent, inner) element counts.
struct AxisSplit {
  std::size_t outer = 1;
  std::size_t extent = 1;
  std::size_t inner = 1;
};

AxisSplit split_at(const Shape& shape, std::size_t axis) {
  AxisSplit s;
  for (std::size_t i = 0; i < axis; ++i) s.outer *= shape[i];
  s.extent = shape[axis];
  for (std::size_t i = axis + 1; i < shape.size(); ++i) s.inner *= shape[i];
  return s;
}

template <typename Fn>
Tensor map_cells(const Shape& shape, WorkerPool& pool, Fn&& fn) {
  Tensor out(shape);
  auto dst = out.data();
  pool.parallel_for(
      dst.size(),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) dst[i] = fn(i);
      },
      kElementwiseBlock);
  return out;
}

bool apply(Compare op, Cell a, Cell b) {
  switch (op) {
    case Compare::eq:
      return a == b;
    case Compare::ne:
      return a != b;
    case Compare::gt:
      return a > b;
  }
  return false;
}

void check_matvec_shapes(const Tensor& a, std::size_t k, const Tensor& v) {
  require(a.rank() == 4, "batched_matvec: lhs must have rank 4, got " + shape_string(a.shape()));
  require(v.rank() == 3 && v.dim(2) == 1,
          "batched_matvec: rhs must have shape [k,e,1], got " + shape_string(v.shape()));
  require(v.dim(0) == k && v.dim(1) == a.dim(3),
          "batched_matvec: inner dimensions disagree: " + shape_string(a.shape()) + " x " +
              shape_string(v.shape()));
}

// Shared body of batched_matvec and gathered_matvec. column(j) maps output
// slot j to the axis-1 slice of a it reads.
template <typename ColumnFn>
Tensor matvec_impl(const Tensor& a, std::size_t k, ColumnFn column, const Tensor& v,
                   WorkerPool& pool) {
  const std::size_t n = a.dim(0);
  const std::size_t m = a.dim(1);
  const std::size_t rows = a.dim(2);
  const std::size_t cols = a.dim(3);
  Tensor out({n, k, rows, 1});
  const Cell* src = a.data().data();
  const Cell* vec = v.data().data();
  Cell* dst = out.data().data();
  std::atomic<bool> overflow{false};

  pool.parallel_for(n, [&](std::size_t begin, std::size_t end) {
    bool local_overflow = false;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Cell* block = src + ((i * m + column(j)) * rows) * cols;
        const Cell* rhs = vec + j * cols;
        Cell* result = dst + (i * k + j) * rows;
        for (std::size_t r = 0; r < rows; ++r) {
          const Cell* row = block + r * cols;
          std::uint32_t acc = 0;
          for (std::size_t c = 0; c < cols; ++c) acc += std::uint32_t(row[c]) * rhs[c];
          local_overflow |= acc > kCellMax;
          result[r] = static_cast<Cell>(acc);
        }
      }
    }
    if (local_overflow) overflow.store(true, std::memory_order_relaxed);
  });

  if (overflow.load()) throw std::overflow_error("batched_matvec: result exceeds cell range");
  return out;
}

}  // namespace

Tensor::Tensor(Shape shape, Cell fill) : shape_(std::move(shape)), data_(element_count(shape_), fill) {}

Tensor::Tensor(Shape shape, std::vector<Cell> data) : shape_(std::move(shape)), data_(std::move(data)) {
  require(data_.size() == element_count(shape_),
          "Tensor: data length " + std::to_string(data_.size()) + " does not match shape " +
              shape_string(shape_));
}

Tensor Tensor::vector(std::initializer_list<Cell> values) {
  return Tensor({values.size()}, std::vector<Cell>(values));
}

Tensor Tensor::matrix(std::initializer_list<std::initializer_list<Cell>> rows) {
  const std::size_t ncols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Cell> data;
  data.reserve(rows.size() * ncols);
  for (const auto& row : rows) {
    require(row.size() == ncols, "Tensor::matrix: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Tensor({rows.size(), ncols}, std::move(data));
}

Tensor Tensor::reshaped(Shape shape) const& {
  Tensor copy = *this;
  return std::move(copy).reshaped(std::move(shape));
}

Tensor Tensor::reshaped(Shape shape) && {
  require(element_count(shape) == data_.size(),
          "reshape: " + shape_string(shape_) + " -> " + shape_string(shape));
  shape_ = std::move(shape);
  return std::move(*this);
}

std::size_t Tensor::offset(std::initializer_list<std::size_t> index) const {
  require(index.size() == shape_.size(), "Tensor::at: index rank mismatch");
  std::size_t flat = 0;
  std::size_t axis = 0;
  for (std::size_t i : index) {
    require(i < shape_[axis], "Tensor::at: index out of bounds");
    flat = flat * shape_[axis] + i;
    ++axis;
  }
  return flat;
}

std::size_t element_count(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

std::string shape_string(const Shape& shape) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << ']';
  return os.str();
}

std::size_t normalize_axis(std::ptrdiff_t axis, std::size_t rank) {
  const auto r = static_cast<std::ptrdiff_t>(rank);
  const std::ptrdiff_t fixed = axis < 0 ? axis + r : axis;
  require(fixed >= 0 && fixed < r,
          "axis " + std::to_string(axis) + " out of range for rank " + std::to_string(rank));
  return static_cast<std::size_t>(fixed);
}

Tensor sum_along(const Tensor& t, std::ptrdiff_t axis, WorkerPool& pool) {
  const std::size_t ax = normalize_axis(axis, t.rank());
  const AxisSplit s = split_at(t.shape(), ax);
  Shape out_shape = t.shape();
  out_shape.erase(out_shape.begin() + static_cast<std::ptrdiff_t>(ax));

  Tensor out(out_shape);
  const Cell* src = t.data().data();
  Cell* dst = out.data().data();
  std::atomic<bool> overflow{false};
  pool.parallel_for(
      s.outer * s.inner,
      [&](std::size_t begin, std::size_t end) {
        bool local_overflow = false;
        for (std::size_t cell = begin; cell < end; ++cell) {
          const std::size_t o = cell / s.inner;
          const std::size_t i = cell % s.inner;
          const Cell* base = src + o * s.extent * s.inner + i;
          std::uint32_t acc = 0;
          for (std::size_t e = 0; e < s.extent; ++e) acc += base[e * s.inner];
          local_overflow |= acc > kCellMax;
          dst[cell] = static_cast<Cell>(acc);
        }
        if (local_overflow) overflow.store(true, std::memory_order_relaxed);
      },
      kElementwiseBlock / std::max<std::size_t>(1, s.extent) + 1);
  if (overflow.load()) throw std::overflow_error("sum_along: result exceeds cell range");
  return out;
}

bool any_true(const Tensor& t) {
  const auto cells = t.data();
  return std::any_of(cells.begin(), cells.end(), [](Cell c) { return c != 0; });
}

std::vector<Index> nonzero_indices(const Tensor& t) {
  std::vector<Index> result;
  const auto cells = t.data();
  const Shape& shape = t.shape();
  for (std::size_t flat = 0; flat < cells.size(); ++flat) {
    if (cells[flat] == 0) continue;
    Index index(shape.size());
    std::size_t rest = flat;
    for (std::size_t axis = shape.size(); axis-- > 0;) {
      index[axis] = rest % shape[axis];
      rest /= shape[axis];
    }
    result.push_back(std::move(index));
  }
  return result;
}

std::vector<std::size_t> nonzero_positions(const Tensor& t) {
  require(t.rank() == 1, "nonzero_positions: rank-1 tensor required, got " + shape_string(t.shape()));
  std::vector<std::size_t> result;
  const auto cells = t.data();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] != 0) result.push_back(i);
  }
  return result;
}

Tensor dim_expand(const Tensor& t, std::ptrdiff_t axis) {
  const std::size_t ax = normalize_axis(axis, t.rank() + 1);
  Shape shape = t.shape();
  shape.insert(shape.begin() + static_cast<std::ptrdiff_t>(ax), 1);
  return t.reshaped(std::move(shape));
}

Tensor dim_reduct(const Tensor& t, std::ptrdiff_t axis) {
  const std::size_t ax = normalize_axis(axis, t.rank());
  require(t.dim(ax) == 1, "dim_reduct: axis " + std::to_string(axis) + " of " +
                              shape_string(t.shape()) + " does not have size 1");
  Shape shape = t.shape();
  shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(ax));
  return t.reshaped(std::move(shape));
}

Tensor where_select(const Tensor& cond, const Tensor& x, const Tensor& y, WorkerPool& pool) {
  require_same_shape(cond, x, "where_select");
  require_same_shape(cond, y, "where_select");
  const Cell* c = cond.data().data();
  const Cell* xs = x.data().data();
  const Cell* ys = y.data().data();
  return map_cells(cond.shape(), pool, [&](std::size_t i) { return c[i] != 0 ? xs[i] : ys[i]; });
}

Tensor compare(const Tensor& t, Compare op, Cell scalar, WorkerPool& pool) {
  const Cell* src = t.data().data();
  return map_cells(t.shape(), pool, [&](std::size_t i) { return Cell(apply(op, src[i], scalar)); });
}

Tensor compare(const Tensor& lhs, Compare op, const Tensor& rhs, WorkerPool& pool) {
  require_same_shape(lhs, rhs, "compare");
  const Cell* a = lhs.data().data();
  const Cell* b = rhs.data().data();
  return map_cells(lhs.shape(), pool, [&](std::size_t i) { return Cell(apply(op, a[i], b[i])); });
}

Tensor batched_matvec(const Tensor& a, const Tensor& v, WorkerPool& pool) {
  require(a.rank() == 4, "batched_matvec: lhs must have rank 4, got " + shape_string(a.shape()));
  const std::size_t k = a.dim(1);
  check_matvec_shapes(a, k, v);
  return matvec_impl(a, k, [](std::size_t j) { return j; }, v, pool);
}

Tensor gathered_matvec(const Tensor& a, std::span<const std::size_t> columns, const Tensor& v,
                       WorkerPool& pool) {
  require(a.rank() == 4, "gathered_matvec: lhs must have rank 4, got " + shape_string(a.shape()));
  check_matvec_shapes(a, columns.size(), v);
  for (std::size_t c : columns) {
    require(c < a.dim(1), "gathered_matvec: column " + std::to_string(c) + " out of bounds");
  }
  return matvec_impl(a, columns.size(), [&](std::size_t j) { return columns[j]; }, v, pool);
}

Tensor index_select(const Tensor& t, std::ptrdiff_t axis, std::span<const std::size_t> idx) {
  const std::size_t ax = normalize_axis(axis, t.rank());
  const AxisSplit s = split_at(t.shape(), ax);
  for (std::size_t i : idx) {
    require(i < s.extent, "index_select: index " + std::to_string(i) + " out of bounds for axis of size " +
                              std::to_string(s.extent));
  }
  Shape shape = t.shape();
  shape[ax] = idx.size();
  Tensor out(shape);
  const Cell* src = t.data().data();
  Cell* dst = out.data().data();
  for (std::size_t o = 0; o < s.outer; ++o) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Cell* from = src + (o * s.extent + idx[j]) * s.inner;
      std::copy(from, from + s.inner, dst + (o * idx.size() + j) * s.inner);
    }
  }
  return out;
}

Tensor narrow(const Tensor& t, std::ptrdiff_t axis, std::size_t start, std::size_t length) {
  const std::size_t ax = normalize_axis(axis, t.rank());
  require(start <= t.dim(ax) && length <= t.dim(ax) - start,
          "narrow: range [" + std::to_string(start) + "," + std::to_string(start + length) +
              ") exceeds axis of size " + std::to_string(t.dim(ax)));
  std::vector<std::size_t> idx(length);
  std::iota(idx.begin(), idx.end(), start);
  return index_select(t, static_cast<std::ptrdiff_t>(ax), idx);
}

}  // namespace rtac::kernel
