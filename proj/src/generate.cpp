#include "lcsgc/generate.hpp"

#include <algorithm>
#include <vector>

namespace lcsgc {

namespace {

Bound uniform(std::mt19937_64& rng, Bound lo, Bound hi) {
  return std::uniform_int_distribution<Bound>(lo, hi)(rng);
}

GapConstraint random_constraint(std::mt19937_64& rng, Bound max_bound) {
  const Bound a = uniform(rng, 0, max_bound);
  const Bound b = uniform(rng, 0, max_bound);
  return GapConstraint(std::min(a, b), std::max(a, b));
}

// Each constraint contains the previous one: widen by a random amount on
// either side.
GapTuple increasing_tuple(std::mt19937_64& rng, std::size_t t, Bound max_bound) {
  GapTuple tuple;
  if (t == 0) return tuple;
  const Bound start = uniform(rng, 0, max_bound);
  GapConstraint current(start, std::min(max_bound, start + uniform(rng, 0, 1)));
  for (std::size_t p = 0; p < t; ++p) {
    tuple.push_back(current);
    const Bound lower = current.lower() - uniform(rng, 0, std::min<Bound>(1, current.lower()));
    const Bound upper = std::min(max_bound, current.upper() + uniform(rng, 0, 1));
    current = GapConstraint(lower, upper);
  }
  return tuple;
}

// Classes form a strict chain C_1 < ... < C_h under containment, so ranks can
// be compared directly. Position k takes a rank no smaller than what every
// earlier pair of consecutive equal ranks (i, j) forces through i + (k - j);
// that is exactly the synchronization condition.
GapTuple synchronized_tuple(std::mt19937_64& rng, std::size_t t, int classes, Bound max_bound) {
  std::vector<GapConstraint> chain;
  const Bound start = uniform(rng, 0, max_bound);
  chain.emplace_back(start, start);
  while (static_cast<int>(chain.size()) < classes) {
    const GapConstraint& top = chain.back();
    const bool can_lower = top.lower() > 0;
    const bool can_raise = top.upper() < max_bound;
    if (!can_lower && !can_raise) break;
    const bool lower = can_lower && (!can_raise || uniform(rng, 0, 1) == 0);
    chain.emplace_back(top.lower() - (lower ? 1 : 0), top.upper() + (lower ? 0 : 1));
  }
  const auto h = static_cast<int>(chain.size());

  std::vector<int> rank(t);
  std::vector<std::ptrdiff_t> previous(t, -1);
  std::vector<std::ptrdiff_t> last(static_cast<std::size_t>(h), -1);
  for (std::size_t k = 0; k < t; ++k) {
    int floor_rank = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (previous[j] >= 0) {
        floor_rank = std::max(floor_rank, rank[static_cast<std::size_t>(previous[j]) + (k - j)]);
      }
    }
    rank[k] = static_cast<int>(uniform(rng, floor_rank, h - 1));
    auto& seen = last[static_cast<std::size_t>(rank[k])];
    previous[k] = seen;
    seen = static_cast<std::ptrdiff_t>(k);
  }

  GapTuple tuple;
  for (int r : rank) tuple.push_back(chain[static_cast<std::size_t>(r)]);
  return tuple;
}

}  // namespace

Word random_word(std::mt19937_64& rng, Index length, Letter sigma) {
  std::uniform_int_distribution<Letter> letter(1, std::max<Letter>(sigma, 1));
  std::vector<Letter> symbols(static_cast<std::size_t>(length));
  for (auto& s : symbols) s = letter(rng);
  return Word(std::move(symbols));
}

ProblemInstance generate_instance(const GenOptions& options) {
  std::mt19937_64 rng(options.seed);
  ProblemInstance inst;
  inst.variant = options.variant;
  inst.sigma = std::max<Letter>(options.sigma, 1);
  inst.v = random_word(rng, options.m, inst.sigma);
  inst.w = random_word(rng, options.n, inst.sigma);

  const auto t = static_cast<std::size_t>(std::max<Index>(options.m - 1, 0));
  const Bound max_bound = std::max<Bound>(options.max_bound, 0);
  switch (options.variant) {
    case Variant::MC: {
      GapTuple tuple;
      for (std::size_t p = 0; p < t; ++p) tuple.push_back(random_constraint(rng, max_bound));
      inst.gaps = std::move(tuple);
      break;
    }
    case Variant::MC_INC:
      inst.gaps = increasing_tuple(rng, t, max_bound);
      if (!is_increasing(*inst.gaps)) throw Error(ErrorCode::NotIncreasing, "generated tuple is not increasing");
      break;
    case Variant::OneC:
      inst.gaps = GapTuple(t, random_constraint(rng, max_bound));
      break;
    case Variant::O1C_SYNC:
      inst.gaps = synchronized_tuple(rng, t, std::max(options.classes, 1), max_bound);
      if (!is_synchronized(*inst.gaps)) {
        throw Error(ErrorCode::NotSynchronized, "generated tuple is not synchronized");
      }
      break;
    case Variant::SIGMA:
    case Variant::SIGMA_L:
    case Variant::SIGMA_R: {
      SigmaConstraints sc;
      for (Letter a = 1; a <= inst.sigma; ++a) {
        if (options.variant != Variant::SIGMA_R) sc.left.push_back(random_constraint(rng, max_bound));
        if (options.variant != Variant::SIGMA_L) sc.right.push_back(random_constraint(rng, max_bound));
      }
      inst.sigma_constraints = std::move(sc);
      break;
    }
    case Variant::BR: {
      const Index limit = std::max<Index>(std::max(options.m, options.n), 1);
      inst.range_bound = options.range > 0 ? std::min(options.range, limit)
                                           : uniform(rng, 1, std::min<Index>(limit, max_bound + 1));
      break;
    }
    case Variant::CLASSIC:
      break;
  }
  return inst;
}

}  // namespace lcsgc
