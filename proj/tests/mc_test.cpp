#include <gtest/gtest.h>

#include "lcsgc/bounded_range.hpp"
#include "lcsgc/mc.hpp"
#include "lcsgc/oracle.hpp"
#include "support.hpp"

namespace lcsgc {
namespace {

using test::text_word;

ProblemInstance instance(Variant variant, std::string_view v, std::string_view w, GapTuple gaps) {
  ProblemInstance inst;
  inst.variant = variant;
  inst.v = text_word(v);
  inst.w = text_word(w);
  inst.gaps = std::move(gaps);
  return validate_instance(inst);
}

TEST(LcsMc, Examples) {
  EXPECT_EQ(lcs_mc(text_word("abc"), text_word("abc"), {{0, 0}, {1, 1}}).length, 2);
  EXPECT_EQ(lcs_mc(text_word("abcde"), text_word("ace"), GapTuple(4, GapConstraint(0, 5))).length, 3);
  EXPECT_EQ(lcs_mc(text_word("ab"), text_word("cd"), {{0, 2}}).length, 0);
  EXPECT_EQ(lcs_mc(Word(), text_word("cd"), {}).length, 0);
  EXPECT_EQ(lcs_mc(text_word("a"), text_word("aaa"), {}).length, 1);
}

TEST(LcsMc, TupleLengthMismatch) {
  EXPECT_THROW(lcs_mc(text_word("abc"), text_word("abc"), {{0, 0}}), Error);
}

TEST(LcsMc, WitnessOfTheExample) {
  const ProblemInstance inst = instance(Variant::MC, "abc", "abc", {{0, 0}, {1, 1}});
  const SolveResult result = lcs_mc(inst.v, inst.w, *inst.gaps, true);
  ASSERT_TRUE(result.witness);
  EXPECT_EQ(result.witness->subsequence, text_word("ab"));
  EXPECT_TRUE(verify_witness(inst, result));
}

TEST(LcsMcInc, Examples) {
  EXPECT_EQ(lcs_mc_inc(text_word("abc"), text_word("abc"), {{1, 1}, {0, 2}}).length, 2);
  EXPECT_EQ(lcs_mc_inc(text_word("abcd"), text_word("abcd"), {{0, 0}, {0, 1}, {0, 2}}).length, 4);
  EXPECT_EQ(lcs_mc_inc(text_word("xa"), text_word("ya"), {{0, 1}}).length, 1);
  EXPECT_EQ(lcs_mc_inc(text_word("ab"), text_word("cd"), {{0, 2}}).length, 0);
}

TEST(LcsMcInc, RejectsNonIncreasingTuples) {
  try {
    lcs_mc_inc(text_word("abc"), text_word("abc"), {{0, 2}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIncreasing);
  }
}

TEST(LcsMc, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const ProblemInstance inst = validate_instance(test::random_instance(seed, Variant::MC, 0, 9, 3));
    const SolveResult result = lcs_mc(inst.v, inst.w, *inst.gaps, true);
    ASSERT_EQ(result.length, oracle_solve(inst).length) << "seed " << seed;
    ASSERT_TRUE(result.witness);
    EXPECT_TRUE(verify_witness(inst, result)) << "seed " << seed;
  }
}

TEST(LcsMcInc, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const ProblemInstance inst = validate_instance(test::random_instance(seed, Variant::MC_INC, 0, 9, 3));
    ASSERT_EQ(lcs_mc_inc(inst.v, inst.w, *inst.gaps).length, oracle_solve(inst).length) << "seed " << seed;
  }
}

TEST(LcsMc, TrivialTupleIsClassicLcs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ProblemInstance inst = test::random_instance(seed, Variant::CLASSIC, 0, 50, 4);
    EXPECT_EQ(lcs_mc(inst.v, inst.w, test::trivial_tuple(inst.v, inst.w)).length,
              lcs_classic(inst.v, inst.w).length)
        << "seed " << seed;
  }
}

TEST(LcsMcInc, AgreesWithLayered) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ProblemInstance inst = validate_instance(test::random_instance(seed, Variant::MC_INC, 1, 40, 3, 6));
    EXPECT_EQ(lcs_mc_inc(inst.v, inst.w, *inst.gaps).length, lcs_mc(inst.v, inst.w, *inst.gaps).length)
        << "seed " << seed;
  }
}

TEST(LcsMc, WideningNeverDecreasesTheAnswer) {
  std::mt19937_64 rng(71);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ProblemInstance inst = validate_instance(test::random_instance(seed, Variant::MC, 1, 20, 3));
    GapTuple wider = *inst.gaps;
    for (auto& c : wider) {
      c = GapConstraint(std::max<Bound>(0, c.lower() - test::uniform(rng, 0, 2)), c.upper() + test::uniform(rng, 0, 2));
    }
    EXPECT_LE(lcs_mc(inst.v, inst.w, *inst.gaps).length, lcs_mc(inst.v, inst.w, wider).length) << "seed " << seed;
  }
}

TEST(LcsMc, LayersStopAtTheFirstEmptyOne) {
  const SolveResult result = lcs_mc(text_word("abab"), text_word("abab"), {{5, 5}, {0, 0}, {0, 0}});
  EXPECT_EQ(result.length, 1);
  EXPECT_EQ(result.stats.layers, 2U);
}

}  // namespace
}  // namespace lcsgc
