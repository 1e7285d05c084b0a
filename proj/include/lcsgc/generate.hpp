#pragma once

#include <cstdint>
#include <random>

#include "lcsgc/core.hpp"

namespace lcsgc {

struct GenOptions {
  std::uint64_t seed = 1;
  Index m = 8;
  Index n = 8;
  Letter sigma = 2;
  Variant variant = Variant::MC;
  Bound max_bound = 4;  // upper limit for every sampled gap bound
  Index range = 0;      // B for BR; 0 samples it from [1, min(max(m,n), max_bound + 1)]
  int classes = 3;      // distinct constraints for o1c-sync (capped by max_bound)
};

/// Uniform word of the given length over [1..sigma].
Word random_word(std::mt19937_64& rng, Index length, Letter sigma);

/// Deterministic random instance. MC-INC tuples are increasing and O1C-SYNC
/// tuples synchronized by construction; both are checked before returning.
ProblemInstance generate_instance(const GenOptions& options);

}  // namespace lcsgc
