#pragma once

#include <algorithm>
#include <cstdint>

#include "lcsgc/error.hpp"
#include "lcsgc/grid.hpp"

namespace lcsgc {

/// Two-dimensional segment tree over an m x n grid of values (initially 0)
/// supporting "raise every cell of a rectangle to at least x" and point reads.
///
/// The outer tree ranges over columns, every outer node owns an inner tree
/// over rows, and every inner node stores a value that applies to the whole
/// submatrix it represents. Both levels use the bottom-up array layout
/// (leaves at [size, 2 size)), so the node table is a dense 2n x 2m grid.
/// An update marks O(log n log m) canonical nodes; a query takes the maximum
/// over the inner leaf-to-root paths of all outer ancestors of the column.
template <typename T>
class SegmentTree2D {
 public:
  SegmentTree2D(Index rows, Index cols) : rows_(rows), cols_(cols), nodes_(Grid<T>::Zero(2 * cols, 2 * rows)) {
    if (rows < 1 || cols < 1) throw Error(ErrorCode::BadInput, "segment tree needs a non-empty grid");
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::uint64_t nodes_touched() const { return nodes_touched_; }

  /// Raises cells [row_lo..row_hi] x [col_lo..col_hi] (1-based, inclusive) to
  /// at least x. The rectangle is clipped to the grid; an empty clip is a no-op.
  void update(Index row_lo, Index row_hi, Index col_lo, Index col_hi, T x) {
    row_lo = std::max<Index>(row_lo, 1);
    col_lo = std::max<Index>(col_lo, 1);
    row_hi = std::min(row_hi, rows_);
    col_hi = std::min(col_hi, cols_);
    if (row_lo > row_hi || col_lo > col_hi) return;
    for (Index l = col_lo - 1 + cols_, r = col_hi + cols_; l < r; l >>= 1, r >>= 1) {
      if (l & 1) update_inner(l++, row_lo, row_hi, x);
      if (r & 1) update_inner(--r, row_lo, row_hi, x);
    }
  }

  T query(Index row, Index col) {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) {
      throw Error(ErrorCode::OutOfRange, "segment tree query outside the grid");
    }
    T best{};
    for (Index a = col - 1 + cols_; a >= 1; a >>= 1) {
      for (Index b = row - 1 + rows_; b >= 1; b >>= 1) {
        best = std::max(best, nodes_(a, b));
        ++nodes_touched_;
      }
    }
    return best;
  }

 private:
  void update_inner(Index outer, Index row_lo, Index row_hi, T x) {
    for (Index l = row_lo - 1 + rows_, r = row_hi + rows_; l < r; l >>= 1, r >>= 1) {
      if (l & 1) raise(outer, l++, x);
      if (r & 1) raise(outer, --r, x);
    }
  }

  void raise(Index outer, Index inner, T x) {
    T& slot = nodes_(outer, inner);
    slot = std::max(slot, x);
    ++nodes_touched_;
  }

  Index rows_;
  Index cols_;
  Grid<T> nodes_;
  std::uint64_t nodes_touched_ = 0;
};

}  // namespace lcsgc
