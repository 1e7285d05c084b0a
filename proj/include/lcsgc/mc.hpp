#pragma once

#include "lcsgc/core.hpp"

namespace lcsgc {

/// LCS under an arbitrary tuple of per-position gap constraints.
///
/// Layer p is the 0/1 matrix of cells (i, j) at which some common
/// gaps[1..p-1]-subsequence of length p ends in both words. Layer p is built
/// from layer p-1 in O(mn) with sliding row sums and d x d box sums
/// (d = u - l + 1 for the constraint (l, u) of gap p-1), so the whole solve is
/// O(mn * (k + 1)) for answer k. Layers are only retained when a witness is
/// requested. Requires gaps.size() == |v| - 1 for non-empty v.
SolveResult lcs_mc(const Word& v, const Word& w, const GapTuple& gaps, bool want_witness = false);

/// LCS under an increasing tuple (each constraint contained in the next) in
/// O(mn log m log n) with a two-dimensional segment tree: once a cell's value p
/// is final it raises the whole rectangle reachable through gap p to p + 1.
/// Throws NotIncreasing when the tuple is not increasing. Length only.
SolveResult lcs_mc_inc(const Word& v, const Word& w, const GapTuple& gaps);

}  // namespace lcsgc
