#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lcsgc/error.hpp"
#include "lcsgc/grid.hpp"

namespace lcsgc {

/// Sparse table for maximum queries over square submatrices, filled one cell
/// at a time in row-major order.
///
/// Level q holds, at (i, j), the maximum of the 2^q x 2^q square whose
/// bottom-right corner is (i, j); cells outside the grid count as 0. Inserting
/// a cell computes all of its levels from four level-(q-1) entries that are
/// already final, and a query combines four (possibly overlapping) squares.
///
/// Memory is m * n * (1 + floor(log2 max(m, n))) values. Levels go up to the
/// longer side because a query square may overhang the grid towards the top
/// or the left while still covering up to max(m, n) in-range columns or rows.
template <typename T>
class DynamicSquareRMQ {
 public:
  DynamicSquareRMQ(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error(ErrorCode::BadInput, "RMQ needs a non-empty grid");
    const Index longest = std::max(rows, cols);
    floor_log_.assign(static_cast<std::size_t>(longest) + 1, 0);
    for (Index h = 2; h <= longest; ++h) {
      floor_log_[static_cast<std::size_t>(h)] = floor_log_[static_cast<std::size_t>(h / 2)] + 1;
    }
    levels_.assign(static_cast<std::size_t>(floor_log_.back()) + 1, Grid<T>::Zero(rows, cols));
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  int levels() const { return static_cast<int>(levels_.size()); }
  std::uint64_t cells_inserted() const { return inserted_; }

  /// Sets cell (i, j) to x. Cells must arrive in row-major order, each once.
  void insert(Index i, Index j, T x) {
    const Index expected = static_cast<Index>(inserted_);
    if ((i - 1) * cols_ + (j - 1) != expected || i < 1 || j < 1 || i > rows_ || j > cols_) {
      throw Error(ErrorCode::BadInput, "RMQ cells must be inserted once each in row-major order");
    }
    levels_[0](i - 1, j - 1) = x;
    for (std::size_t q = 1; q < levels_.size(); ++q) {
      const Index half = Index{1} << (q - 1);
      const int prev = static_cast<int>(q - 1);
      levels_[q](i - 1, j - 1) = std::max({at(i - half, j - half, prev), at(i, j - half, prev),
                                           at(i - half, j, prev), at(i, j, prev)});
    }
    ++inserted_;
  }

  /// Maximum over rows [row_lo..row_hi] x cols [col_lo..col_hi] (1-based).
  /// The region must be square; parts above or left of the grid read as 0,
  /// and an empty region yields 0. Every in-grid cell must be inserted.
  T query(Index row_lo, Index row_hi, Index col_lo, Index col_hi) const {
    if (row_hi - row_lo != col_hi - col_lo) {
      throw Error(ErrorCode::BadInput, "RMQ queries must be square");
    }
    if (row_hi < row_lo || row_hi < 1 || col_hi < 1) return T{};
    if (row_hi > rows_ || col_hi > cols_ ||
        (row_hi - 1) * cols_ + (col_hi - 1) >= static_cast<Index>(inserted_)) {
      throw Error(ErrorCode::OutOfRange, "RMQ query reaches cells not inserted yet");
    }
    // Shrinking the side down to max(row_hi, col_hi) keeps every in-grid cell.
    const Index side = std::min(row_hi - row_lo + 1, std::max(row_hi, col_hi));
    const int q = floor_log_[static_cast<std::size_t>(side)];
    const Index span = (Index{1} << q) - 1;
    const Index top = row_hi - side + 1 + span;
    const Index left = col_hi - side + 1 + span;
    return std::max({at(top, left, q), at(top, col_hi, q), at(row_hi, left, q), at(row_hi, col_hi, q)});
  }

 private:
  T at(Index i, Index j, int q) const {
    if (i < 1 || j < 1) return T{};
    return levels_[static_cast<std::size_t>(q)](i - 1, j - 1);
  }

  Index rows_;
  Index cols_;
  std::vector<int> floor_log_;
  std::vector<Grid<T>> levels_;
  std::uint64_t inserted_ = 0;
};

}  // namespace lcsgc
