#include "lcsgc/bounded_range.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

namespace lcsgc {

namespace {

// Plain LCS length with one rolling row; `row` is scratch space.
Index lcs_length(std::span<const Letter> a, std::span<const Letter> b, std::vector<std::int32_t>& row) {
  row.assign(b.size() + 1, 0);
  for (Letter x : a) {
    std::int32_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::int32_t up = row[j];
      row[j] = x == b[j - 1] ? diagonal + 1 : std::max(up, row[j - 1]);
      diagonal = up;
    }
  }
  return row.back();
}

void check_range(const Word& v, const Word& w, Index range) {
  const Index limit = std::max(v.size(), w.size());
  if (range < 1 || range > limit) {
    throw Error(ErrorCode::OutOfRange, "B must lie in [1, " + std::to_string(limit) + "]");
  }
}

// Best window pair whose window starts (0-based) lie in [v_first, v_last] x
// [w_first, w_last].
Index best_window_pair(std::span<const Letter> v, std::span<const Letter> w, Index range, Index v_first,
                       Index v_last, Index w_first, Index w_last, std::vector<std::int32_t>& row) {
  const auto v_len = static_cast<std::size_t>(std::min<Index>(range, static_cast<Index>(v.size())));
  const auto w_len = static_cast<std::size_t>(std::min<Index>(range, static_cast<Index>(w.size())));
  const auto cap = static_cast<Index>(std::min(v_len, w_len));
  Index best = 0;
  for (Index a = v_first; a <= v_last && best < cap; ++a) {
    for (Index b = w_first; b <= w_last && best < cap; ++b) {
      best = std::max(best, lcs_length(v.subspan(static_cast<std::size_t>(a), v_len),
                                       w.subspan(static_cast<std::size_t>(b), w_len), row));
    }
  }
  return best;
}

}  // namespace

Index block_count(Index length, Index range) { return (length + range - 1) / range; }

BlockSpan block_span(Index index, Index range, Index length) {
  return BlockSpan{index * range + 1, std::min((index + 2) * range, length)};
}

SolveResult lcs_classic(const Word& v, const Word& w, bool want_witness) {
  SolveResult result;
  if (want_witness) result.witness = Witness{};
  if (v.empty() || w.empty()) return result;
  if (!want_witness) {
    std::vector<std::int32_t> row;
    result.length = lcs_length(v.symbols(), w.symbols(), row);
    return result;
  }

  const Index m = v.size();
  const Index n = w.size();
  Grid<std::int32_t> table = Grid<std::int32_t>::Zero(m + 1, n + 1);
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      table(i, j) = v.at(i) == w.at(j) ? table(i - 1, j - 1) + 1 : std::max(table(i - 1, j), table(i, j - 1));
    }
  }
  result.length = table(m, n);

  std::vector<Index> pv;
  std::vector<Index> pw;
  std::vector<Letter> letters;
  for (Index i = m, j = n; i > 0 && j > 0;) {
    if (v.at(i) == w.at(j)) {
      pv.push_back(i);
      pw.push_back(j);
      letters.push_back(v.at(i));
      --i;
      --j;
    } else if (table(i - 1, j) >= table(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(pv.begin(), pv.end());
  std::reverse(pw.begin(), pw.end());
  std::reverse(letters.begin(), letters.end());
  result.witness = Witness{Word(std::move(letters)), Embedding{std::move(pv)}, Embedding{std::move(pw)}};
  return result;
}

SolveResult lcs_br_exact(const Word& v, const Word& w, Index range, RangeStrategy strategy, unsigned threads) {
  SolveResult result;
  if (v.empty() || w.empty()) return result;
  check_range(v, w, range);

  const Index m = v.size();
  const Index n = w.size();
  const Index v_last_start = m - std::min(range, m);
  const Index w_last_start = n - std::min(range, n);

  if (strategy == RangeStrategy::Naive) {
    std::vector<std::int32_t> row;
    result.length = best_window_pair(v.symbols(), w.symbols(), range, 0, v_last_start, 0, w_last_start, row);
    return result;
  }

  // Block pair (bi, bj) spans v[bi*B + 1 : (bi+2)*B] x w[bj*B + 1 : (bj+2)*B]
  // (clipped at the word ends). Each window start is owned by the block it
  // falls in, and a window starting in block bi ends inside v_bi, so every
  // window pair is evaluated exactly once.
  const Index v_blocks = block_count(m, range);
  const Index w_blocks = block_count(n, range);
  std::atomic<Index> next_row{0};
  std::atomic<std::uint64_t> pairs{0};

  auto work = [&](Index& local_best) {
    std::vector<std::int32_t> row;
    for (Index bi = next_row++; bi < v_blocks; bi = next_row++) {
      const Index a_first = bi * range;
      const Index a_last = std::min(a_first + range - 1, v_last_start);
      if (a_first > a_last) continue;
      for (Index bj = 0; bj < w_blocks; ++bj) {
        const Index b_first = bj * range;
        const Index b_last = std::min(b_first + range - 1, w_last_start);
        if (b_first > b_last) continue;
        ++pairs;
        local_best = std::max(local_best, best_window_pair(v.symbols(), w.symbols(), range, a_first, a_last,
                                                           b_first, b_last, row));
      }
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(v_blocks)));
  std::vector<Index> best(workers, 0);
  if (workers == 1) {
    work(best[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back([&, t] { work(best[t]); });
  }
  result.length = *std::max_element(best.begin(), best.end());
  result.stats.block_pairs = pairs;
  return result;
}

RangeBounds lcs_br_approx(const Word& v, const Word& w, Index range) {
  if (v.empty() || w.empty()) return {};
  check_range(v, w, range);

  const Index m = v.size();
  const Index n = w.size();
  std::vector<std::int32_t> row;
  Index upper = 0;
  for (Index bi = 0; bi < block_count(m, range); ++bi) {
    const BlockSpan vb = block_span(bi, range, m);
    const auto v_block = v.symbols().subspan(static_cast<std::size_t>(vb.first - 1),
                                             static_cast<std::size_t>(vb.last - vb.first + 1));
    for (Index bj = 0; bj < block_count(n, range); ++bj) {
      const BlockSpan wb = block_span(bj, range, n);
      const auto w_block = w.symbols().subspan(static_cast<std::size_t>(wb.first - 1),
                                               static_cast<std::size_t>(wb.last - wb.first + 1));
      upper = std::max(upper, lcs_length(v_block, w_block, row));
    }
  }
  // A monotone matching inside a 2B x 2B block pair crosses at most three of
  // its four B x B quadrants, and each quadrant is a window pair.
  return RangeBounds{(upper + 2) / 3, upper};
}

}  // namespace lcsgc
