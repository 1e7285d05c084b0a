#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lcsgc/error.hpp"
#include "lcsgc/grid.hpp"

namespace lcsgc {

/// Offsets of the window read at cell (i, j): rows [i - row_max, i - row_min]
/// and columns [j - col_max, j - col_min], intersected with the grid.
struct WindowOffsets {
  Index row_min = 1;
  Index row_max = 1;
  Index col_min = 1;
  Index col_max = 1;
};

struct ScanStats {
  std::uint64_t column_pushes = 0;
  std::uint64_t column_pops = 0;
  std::uint64_t row_pushes = 0;
  std::uint64_t row_pops = 0;

  std::uint64_t pushes() const { return column_pushes + row_pushes; }
  std::uint64_t pops() const { return column_pops + row_pops; }
};

namespace detail {

// Deque of (key, value) with strictly increasing keys and strictly
// decreasing values, stored in a vector with a moving head.
template <typename T>
class MonotoneQueue {
 public:
  struct Entry {
    Index key;
    T value;
  };

  bool empty() const { return head_ == items_.size(); }
  const Entry& front() const { return items_[head_]; }

  // Returns the number of entries popped from the back.
  std::size_t push(Index key, T value) {
    std::size_t popped = 0;
    while (!empty() && items_.back().value <= value) {
      items_.pop_back();
      ++popped;
    }
    items_.push_back({key, value});
    return popped;
  }

  // Drops entries with key < bound; returns how many.
  std::size_t evict_before(Index bound) {
    std::size_t popped = 0;
    while (!empty() && items_[head_].key < bound) {
      ++head_;
      ++popped;
    }
    if (empty()) {
      items_.clear();
      head_ = 0;
    } else if (head_ >= 32 && 2 * head_ >= items_.size()) {
      items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(head_));
      head_ = 0;
    }
    return popped;
  }

  void clear() {
    items_.clear();
    head_ = 0;
  }

 private:
  std::vector<Entry> items_;
  std::size_t head_ = 0;
};

}  // namespace detail

/// Sliding two-dimensional window maximum over a matrix that is filled in
/// row-major order. One monotone deque per column tracks the rows inside the
/// vertical window; per row, the column heads form an array whose sliding
/// maximum over the horizontal window is kept with one more monotone deque.
/// A full pass over an m x n matrix costs O(mn).
///
/// Usage per row i (1-based, consecutive): begin_row(i), then window_max(j)
/// for non-decreasing j. Rows read by the window lie strictly above row i
/// (row_min >= 1), so the caller may write row i while scanning it.
template <typename T>
class WindowedMaxGrid {
 public:
  WindowedMaxGrid(const Grid<T>& matrix, WindowOffsets window)
      : matrix_(&matrix),
        window_(window),
        columns_(static_cast<std::size_t>(matrix.cols())),
        column_max_(static_cast<std::size_t>(matrix.cols()), T{}) {
    if (window.row_min < 1 || window.col_min < 1 || window.row_min > window.row_max ||
        window.col_min > window.col_max) {
      throw Error(ErrorCode::BadInput, "window offsets must satisfy 1 <= min <= max");
    }
  }

  const WindowOffsets& window() const { return window_; }
  const ScanStats& stats() const { return stats_; }

  void begin_row(Index i) {
    if (i != row_ + 1) throw Error(ErrorCode::BadInput, "rows must be scanned consecutively from 1");
    row_ = i;
    const Index cols = matrix_->cols();
    const Index entering = i - window_.row_min;
    const Index oldest = i - window_.row_max;
    for (Index f = 1; f <= cols; ++f) {
      auto& q = columns_[static_cast<std::size_t>(f - 1)];
      if (entering >= 1) {
        const T x = (*matrix_)(entering - 1, f - 1);
        if (x > T{}) {
          stats_.column_pops += q.push(entering, x);
          ++stats_.column_pushes;
        }
      }
      stats_.column_pops += q.evict_before(oldest);
      column_max_[static_cast<std::size_t>(f - 1)] = q.empty() ? T{} : q.front().value;
    }
    across_.clear();
    next_column_ = 1;
    last_j_ = 0;
  }

  /// Maximum of the window around (row, j); 0 when the window is empty.
  T window_max(Index j) {
    if (j < last_j_) throw Error(ErrorCode::BadInput, "columns must be queried in order");
    last_j_ = j;
    const Index newest = std::min(j - window_.col_min, matrix_->cols());
    for (; next_column_ <= newest; ++next_column_) {
      const T x = column_max_[static_cast<std::size_t>(next_column_ - 1)];
      if (x > T{}) {
        stats_.row_pops += across_.push(next_column_, x);
        ++stats_.row_pushes;
      }
    }
    stats_.row_pops += across_.evict_before(j - window_.col_max);
    return across_.empty() ? T{} : across_.front().value;
  }

 private:
  const Grid<T>* matrix_;
  WindowOffsets window_;
  std::vector<detail::MonotoneQueue<T>> columns_;
  std::vector<T> column_max_;
  detail::MonotoneQueue<T> across_;
  Index row_ = 0;
  Index next_column_ = 1;
  Index last_j_ = 0;
  ScanStats stats_;
};

/// Fills a rows x cols matrix in row-major order: for every cell where
/// predicate(i, j) holds, M[i, j] = score(i, j, m) with m the maximum of the
/// window around (i, j), or 0 when that window is empty.
template <typename T, typename Predicate, typename Score>
Grid<T> run_scan(Index rows, Index cols, WindowOffsets window, Predicate&& predicate, Score&& score,
                 ScanStats* stats = nullptr) {
  Grid<T> matrix = Grid<T>::Zero(rows, cols);
  WindowedMaxGrid<T> scan(matrix, window);
  for (Index i = 1; i <= rows; ++i) {
    scan.begin_row(i);
    for (Index j = 1; j <= cols; ++j) {
      if (predicate(i, j)) matrix(i - 1, j - 1) = score(i, j, scan.window_max(j));
    }
  }
  if (stats != nullptr) *stats = scan.stats();
  return matrix;
}

}  // namespace lcsgc
