#pragma once

#include "lcsgc/core.hpp"

namespace lcsgc {

/// Folklore quadratic LCS; the witness comes from the usual backtrack.
SolveResult lcs_classic(const Word& v, const Word& w, bool want_witness = false);

enum class RangeStrategy {
  Naive,    // every pair of length-B windows
  Blocked,  // the same window pairs, grouped by overlapping 2B-blocks
};

/// Longest common subsequence that fits inside a length-B factor of both
/// words. Words shorter than B count as a single window. O(mn B^2) with either
/// strategy; `threads` > 1 spreads the blocked strategy's block rows over
/// worker threads.
SolveResult lcs_br_exact(const Word& v, const Word& w, Index range, RangeStrategy strategy,
                         unsigned threads = 1);

/// Number of B-blocks of a word of the given length: ceil(length / B).
Index block_count(Index length, Index range);

/// 1-based inclusive extent of block `index` (0-based): [index*B + 1, min((index+2)*B, length)].
/// Every factor of length B lies inside at least one block.
struct BlockSpan {
  Index first = 0;
  Index last = 0;
};
BlockSpan block_span(Index index, Index range, Index length);

struct RangeBounds {
  Index lower = 0;
  Index upper = 0;
};

/// Bounds on lcs_br_exact from the plain LCS of every block pair
/// (v[iB+1 : (i+2)B], w[jB+1 : (j+2)B]): with U the largest such LCS,
/// ceil(U / 3) <= exact <= U. O(mn) overall.
RangeBounds lcs_br_approx(const Word& v, const Word& w, Index range);

}  // namespace lcsgc
