#pragma once

#include "lcsgc/core.hpp"

namespace lcsgc {

inline constexpr Index kDefaultOracleCap = 12;

/// Exhaustive reference solver. Enumerates embeddings into v in lexicographic
/// order and keeps the first one of maximal length that also embeds into w
/// under the instance's constraints. Throws CapExceeded when either word is
/// longer than `cap`.
SolveResult oracle_solve(const ProblemInstance& inst, Index cap = kDefaultOracleCap);

/// True iff `embedding` realizes a subsequence of `word` whose gaps satisfy
/// the constraints of `inst` (which must be validated).
bool admits_embedding(const ProblemInstance& inst, const Word& word, const Embedding& embedding);

/// True iff the witness has `result.length` symbols and both of its
/// embeddings realize it under the instance's constraints.
bool verify_witness(const ProblemInstance& inst, const SolveResult& result);

}  // namespace lcsgc
