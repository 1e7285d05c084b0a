#pragma once

#include "lcsgc/core.hpp"

namespace lcsgc {

/// LCS where every gap obeys the same constraint; O(mn).
SolveResult lcs_1c(const Word& v, const Word& w, const GapConstraint& constraint);

/// LCS under a synchronized tuple with h distinct constraints; O(mn h).
/// Throws NotSynchronized when the tuple is not synchronized.
SolveResult lcs_o1c_sync(const Word& v, const Word& w, const GapTuple& gaps);

}  // namespace lcsgc
