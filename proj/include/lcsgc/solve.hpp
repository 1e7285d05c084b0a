#pragma once

#include <string_view>

#include "lcsgc/core.hpp"

namespace lcsgc {

enum class Algorithm { Auto, Layered, SegTree, Deque, Rmq, Naive, Blocked, Classic };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// Picks the concrete algorithm for a validated instance. `Auto` resolves to
/// the best bound for the variant; the Σ variants switch to the RMQ flavor
/// once σ exceeds floor(log2 m). Throws UnsupportedAlgorithm when the
/// requested algorithm does not apply to the variant.
Algorithm resolve_algorithm(const ProblemInstance& inst, Algorithm requested);

struct SolveOptions {
  Algorithm algorithm = Algorithm::Auto;
  bool want_witness = false;  // honored by the layered and classic solvers
  unsigned threads = 1;       // BR block pairs only
};

/// Validates `inst` and dispatches to the solver for its variant.
SolveResult solve(const ProblemInstance& inst, const SolveOptions& options = {});

}  // namespace lcsgc
