#include "lcsgc/sigma.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcsgc/square_rmq.hpp"
#include "lcsgc/windowed_max_grid.hpp"

namespace lcsgc {

namespace {

using Values = Grid<std::int32_t>;

WindowOffsets window_for(const GapConstraint& gap, Index limit) {
  const Index lower = gap.lower() + 1;
  const Index upper = std::min<Index>(gap.upper(), limit) + 1;
  return WindowOffsets{lower, upper, lower, upper};
}

// Square RMQ over the predecessor window of (i, j) for gap constraint `gap`.
std::int32_t window_query(const DynamicSquareRMQ<std::int32_t>& rmq, Index i, Index j, const GapConstraint& gap,
                          Index limit) {
  const Index upper = std::min<Index>(gap.upper(), limit);
  return rmq.query(i - upper - 1, i - gap.lower() - 1, j - upper - 1, j - gap.lower() - 1);
}

void require_total(std::span<const GapConstraint> map, const Word& v, const Word& w) {
  if (static_cast<Letter>(map.size()) < std::max(v.max_letter(), w.max_letter())) {
    throw Error(ErrorCode::BadInput, "per-letter constraints must cover every letter");
  }
}

SolveResult sigma_r_deque(const Word& v, const Word& w, std::span<const GapConstraint> right) {
  const Index m = v.size();
  const Index n = w.size();
  const Index limit = std::max(m, n);
  const Letter sigma = std::max(v.max_letter(), w.max_letter());

  Values best = Values::Zero(m, n);
  std::vector<WindowedMaxGrid<std::int32_t>> scans;
  scans.reserve(static_cast<std::size_t>(sigma));
  for (Letter a = 1; a <= sigma; ++a) scans.emplace_back(best, window_for(right[static_cast<std::size_t>(a - 1)], limit));

  for (Index i = 1; i <= m; ++i) {
    for (auto& scan : scans) scan.begin_row(i);
    for (Index j = 1; j <= n; ++j) {
      const Letter a = v.at(i);
      if (a != w.at(j)) continue;
      best(i - 1, j - 1) = 1 + scans[static_cast<std::size_t>(a - 1)].window_max(j);
    }
  }

  SolveResult result;
  result.length = best.maxCoeff();
  for (const auto& scan : scans) {
    result.stats.deque_pushes += scan.stats().pushes();
    result.stats.deque_pops += scan.stats().pops();
  }
  return result;
}

SolveResult sigma_r_rmq(const Word& v, const Word& w, std::span<const GapConstraint> right) {
  const Index m = v.size();
  const Index n = w.size();
  const Index limit = std::max(m, n);

  DynamicSquareRMQ<std::int32_t> rmq(m, n);
  std::int32_t answer = 0;
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      std::int32_t value = 0;
      const Letter a = v.at(i);
      if (a == w.at(j)) {
        value = (i == 1 || j == 1) ? 1 : 1 + window_query(rmq, i, j, right[static_cast<std::size_t>(a - 1)], limit);
      }
      rmq.insert(i, j, value);
      answer = std::max(answer, value);
    }
  }

  SolveResult result;
  result.length = answer;
  result.stats.rmq_cells = rmq.cells_inserted();
  return result;
}

SolveResult sigma_deque(const Word& v, const Word& w, const SigmaConstraints& constraints) {
  const Index m = v.size();
  const Index n = w.size();
  const Index limit = std::max(m, n);
  const Letter sigma = std::max(v.max_letter(), w.max_letter());
  const auto letters = static_cast<std::size_t>(sigma);

  // Matrix b holds the values of cells whose letter is b; the structure for
  // (a, b) scans matrix b with the window of left(b) intersected with right(a).
  std::vector<Values> by_letter(letters, Values::Zero(m, n));
  std::vector<std::optional<WindowedMaxGrid<std::int32_t>>> scans(letters * letters);
  for (Letter a = 1; a <= sigma; ++a) {
    for (Letter b = 1; b <= sigma; ++b) {
      const auto gap = intersect(constraints.right_of(a), constraints.left_of(b));
      if (!gap) continue;
      scans[static_cast<std::size_t>(a - 1) * letters + static_cast<std::size_t>(b - 1)].emplace(
          by_letter[static_cast<std::size_t>(b - 1)], window_for(*gap, limit));
    }
  }

  std::int32_t answer = 0;
  for (Index i = 1; i <= m; ++i) {
    for (auto& scan : scans) {
      if (scan) scan->begin_row(i);
    }
    for (Index j = 1; j <= n; ++j) {
      const Letter a = v.at(i);
      if (a != w.at(j)) continue;
      std::int32_t prev = 0;
      for (std::size_t b = 0; b < letters; ++b) {
        auto& scan = scans[static_cast<std::size_t>(a - 1) * letters + b];
        if (scan) prev = std::max(prev, scan->window_max(j));
      }
      by_letter[static_cast<std::size_t>(a - 1)](i - 1, j - 1) = prev + 1;
      answer = std::max(answer, prev + 1);
    }
  }

  SolveResult result;
  result.length = answer;
  for (const auto& scan : scans) {
    if (!scan) continue;
    result.stats.deque_pushes += scan->stats().pushes();
    result.stats.deque_pops += scan->stats().pops();
  }
  return result;
}

SolveResult sigma_rmq(const Word& v, const Word& w, const SigmaConstraints& constraints) {
  const Index m = v.size();
  const Index n = w.size();
  const Index limit = std::max(m, n);
  const Letter sigma = std::max(v.max_letter(), w.max_letter());

  std::vector<DynamicSquareRMQ<std::int32_t>> by_letter;
  by_letter.reserve(static_cast<std::size_t>(sigma));
  for (Letter b = 1; b <= sigma; ++b) by_letter.emplace_back(m, n);

  // Pair windows depend only on (a, b); resolve them once.
  std::vector<std::optional<GapConstraint>> pair_gap(static_cast<std::size_t>(sigma) * static_cast<std::size_t>(sigma));
  for (Letter a = 1; a <= sigma; ++a) {
    for (Letter b = 1; b <= sigma; ++b) {
      pair_gap[static_cast<std::size_t>((a - 1) * sigma + (b - 1))] =
          intersect(constraints.right_of(a), constraints.left_of(b));
    }
  }

  std::int32_t answer = 0;
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const Letter a = v.at(i);
      std::int32_t value = 0;
      if (a == w.at(j)) {
        std::int32_t prev = 0;
        if (i > 1 && j > 1) {
          for (Letter b = 1; b <= sigma; ++b) {
            const auto& gap = pair_gap[static_cast<std::size_t>((a - 1) * sigma + (b - 1))];
            if (gap) prev = std::max(prev, window_query(by_letter[static_cast<std::size_t>(b - 1)], i, j, *gap, limit));
          }
        }
        value = prev + 1;
      }
      // Every table receives every cell so its row-major fill stays dense.
      for (Letter b = 1; b <= sigma; ++b) {
        by_letter[static_cast<std::size_t>(b - 1)].insert(i, j, b == a ? value : 0);
      }
      answer = std::max(answer, value);
    }
  }

  SolveResult result;
  result.length = answer;
  for (const auto& rmq : by_letter) result.stats.rmq_cells += rmq.cells_inserted();
  return result;
}

}  // namespace

SolveResult lcs_sigma_r(const Word& v, const Word& w, std::span<const GapConstraint> right, SigmaFlavor flavor) {
  if (v.empty() || w.empty()) return {};
  require_total(right, v, w);
  return flavor == SigmaFlavor::Deque ? sigma_r_deque(v, w, right) : sigma_r_rmq(v, w, right);
}

SolveResult lcs_sigma_l(const Word& v, const Word& w, std::span<const GapConstraint> left, SigmaFlavor flavor) {
  return lcs_sigma_r(v.reversed(), w.reversed(), left, flavor);
}

SolveResult lcs_sigma(const Word& v, const Word& w, const SigmaConstraints& constraints, SigmaFlavor flavor) {
  if (v.empty() || w.empty()) return {};
  require_total(constraints.left, v, w);
  require_total(constraints.right, v, w);
  return flavor == SigmaFlavor::Deque ? sigma_deque(v, w, constraints) : sigma_rmq(v, w, constraints);
}

}  // namespace lcsgc
