#pragma once

#include <span>

#include "lcsgc/core.hpp"

namespace lcsgc {

enum class SigmaFlavor {
  Deque,  // one sliding-window structure per letter (per letter pair for lcs_sigma)
  Rmq,    // square range-maximum sparse tables
};

/// Gaps constrained by the letter that follows them: `right[a - 1]` applies to
/// every gap directly before an occurrence of letter a. O(mn sigma) with
/// Deque, O(mn log n) with Rmq.
SolveResult lcs_sigma_r(const Word& v, const Word& w, std::span<const GapConstraint> right,
                        SigmaFlavor flavor);

/// Gaps constrained by the letter that precedes them. Solved as lcs_sigma_r
/// on the reversed words.
SolveResult lcs_sigma_l(const Word& v, const Word& w, std::span<const GapConstraint> left,
                        SigmaFlavor flavor);

/// Gaps constrained by both bounding letters at once: a gap between b and a
/// must lie in left(b) and right(a). O(mn sigma^2) with Deque,
/// O(mn sigma log n) with Rmq.
SolveResult lcs_sigma(const Word& v, const Word& w, const SigmaConstraints& constraints, SigmaFlavor flavor);

}  // namespace lcsgc
