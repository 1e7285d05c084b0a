#include "lcsgc/constant.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lcsgc/windowed_max_grid.hpp"

namespace lcsgc {

namespace {

// The window of predecessors for a gap constraint (l, u): rows and columns
// [x - u - 1, x - l - 1].
WindowOffsets window_for(const GapConstraint& gap, Index limit) {
  const Index lower = gap.lower() + 1;
  const Index upper = std::min<Index>(gap.upper(), limit) + 1;
  return WindowOffsets{lower, upper, lower, upper};
}

void add_scan_stats(SolveStats& stats, const ScanStats& scan) {
  stats.deque_pushes += scan.pushes();
  stats.deque_pops += scan.pops();
}

}  // namespace

SolveResult lcs_1c(const Word& v, const Word& w, const GapConstraint& constraint) {
  SolveResult result;
  if (v.empty() || w.empty()) return result;
  const Index limit = std::max(v.size(), w.size());

  ScanStats scan;
  const Grid<std::int32_t> matrix = run_scan<std::int32_t>(
      v.size(), w.size(), window_for(constraint, limit),
      [&](Index i, Index j) { return v.at(i) == w.at(j); },
      [](Index, Index, std::int32_t best) { return best + 1; }, &scan);
  result.length = matrix.maxCoeff();
  add_scan_stats(result.stats, scan);
  return result;
}

SolveResult lcs_o1c_sync(const Word& v, const Word& w, const GapTuple& gaps) {
  SolveResult result;
  if (v.empty() || w.empty()) return result;
  if (static_cast<Index>(gaps.size()) != v.size() - 1) {
    throw Error(ErrorCode::BadTupleLength, "gap tuple must have |v| - 1 entries");
  }
  if (!is_synchronized(gaps)) throw Error(ErrorCode::NotSynchronized, "gap tuple is not synchronized");

  const Index m = v.size();
  const Index n = w.size();
  if (gaps.empty()) {
    for (Index j = 1; j <= n; ++j) {
      if (v.at(1) == w.at(j)) result.length = 1;
    }
    return result;
  }

  // One matrix per distinct constraint r: cell (i, j) of matrix r holds the
  // longest length p ending at (i, j) whose following gap p has class r.
  const LabeledTuple labeled = label_tuple(gaps);
  const int h = labeled.h();
  const auto t = static_cast<std::int32_t>(gaps.size());
  const Index limit = std::max(m, n);

  std::vector<Grid<std::int32_t>> by_class(static_cast<std::size_t>(h), Grid<std::int32_t>::Zero(m, n));
  std::vector<WindowedMaxGrid<std::int32_t>> scans;
  scans.reserve(static_cast<std::size_t>(h));
  for (int r = 1; r <= h; ++r) {
    scans.emplace_back(by_class[static_cast<std::size_t>(r - 1)], window_for(labeled.constraint(r), limit));
  }

  std::vector<std::int32_t> bucket(static_cast<std::size_t>(h));
  std::int32_t best = 0;
  for (Index i = 1; i <= m; ++i) {
    for (auto& scan : scans) scan.begin_row(i);
    for (Index j = 1; j <= n; ++j) {
      if (v.at(i) != w.at(j)) continue;
      std::fill(bucket.begin(), bucket.end(), 0);
      bucket[static_cast<std::size_t>(labeled.label(1) - 1)] = 1;
      best = std::max(best, 1);
      for (auto& scan : scans) {
        const std::int32_t prev = scan.window_max(j);
        if (prev == 0) continue;
        const std::int32_t length = prev + 1;
        best = std::max(best, length);
        // The last symbol of a subsequence has no following gap to classify.
        if (length <= t) {
          auto& slot = bucket[static_cast<std::size_t>(labeled.label(length) - 1)];
          slot = std::max(slot, length);
        }
      }
      for (int r = 0; r < h; ++r) {
        by_class[static_cast<std::size_t>(r)](i - 1, j - 1) = bucket[static_cast<std::size_t>(r)];
      }
    }
  }

  result.length = best;
  for (const auto& scan : scans) add_scan_stats(result.stats, scan.stats());
  return result;
}

}  // namespace lcsgc
