#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lcsgc/core.hpp"
#include "lcsgc/generate.hpp"

namespace lcsgc::test {

inline Index uniform(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

inline Word text_word(std::string_view text) {
  std::vector<Letter> symbols;
  for (char c : text) symbols.push_back(static_cast<Letter>(c - 'a' + 1));
  return Word(std::move(symbols));
}

inline GapTuple constant_tuple(Index length, GapConstraint c) {
  return GapTuple(static_cast<std::size_t>(std::max<Index>(length, 0)), c);
}

inline GapTuple trivial_tuple(const Word& v, const Word& w) {
  return constant_tuple(v.size() - 1, GapConstraint(0, std::max(v.size(), w.size())));
}

inline SigmaConstraints trivial_sigma(const Word& v, const Word& w) {
  return SigmaConstraints::trivial(std::max(v.max_letter(), w.max_letter()), std::max(v.size(), w.size()));
}

/// Random instance with word lengths drawn from [min_len, max_len], seeded
/// from `seed` so every case can be replayed on its own.
inline ProblemInstance random_instance(std::uint64_t seed, Variant variant, Index min_len, Index max_len,
                                       Letter max_sigma, Bound max_bound = 4) {
  std::mt19937_64 rng(seed);
  GenOptions options;
  options.seed = rng();
  options.variant = variant;
  options.m = uniform(rng, min_len, max_len);
  options.n = uniform(rng, min_len, max_len);
  options.sigma = static_cast<Letter>(uniform(rng, 1, max_sigma));
  options.max_bound = max_bound;
  options.classes = static_cast<int>(uniform(rng, 1, 4));
  return generate_instance(options);
}

}  // namespace lcsgc::test
