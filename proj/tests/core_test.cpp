#include <gtest/gtest.h>

#include <random>

#include "lcsgc/core.hpp"
#include "support.hpp"

namespace lcsgc {
namespace {

using test::text_word;

const GapTuple kSyncTuple{{0, 5}, {0, 1}, {0, 2}, {0, 3}, {0, 1}, {0, 5}, {0, 3}, {0, 4}};

TEST(Word, RejectsNonPositiveLetters) {
  EXPECT_THROW(Word({1, 0, 2}), Error);
  EXPECT_EQ(Word({3, 1, 2}).max_letter(), 3);
  EXPECT_EQ(Word().max_letter(), 0);
}

TEST(Word, PositionsAreOneBased) {
  const Word w({4, 5, 6});
  EXPECT_EQ(w.at(1), 4);
  EXPECT_EQ(w.at(3), 6);
  EXPECT_EQ(w.reversed(), Word({6, 5, 4}));
}

TEST(WordsFromText, SharesFirstOccurrenceMapping) {
  const TextPair pair = words_from_text("banana", "nab");
  EXPECT_EQ(pair.alphabet, "ban");
  EXPECT_EQ(pair.v, Word({1, 2, 3, 2, 3, 2}));
  EXPECT_EQ(pair.w, Word({3, 2, 1}));
}

TEST(WordsFromText, LettersOnlyInSecondWordExtendTheAlphabet) {
  const TextPair pair = words_from_text("ab", "cb");
  EXPECT_EQ(pair.alphabet, "abc");
  EXPECT_EQ(pair.w, Word({3, 2}));
}

TEST(GapConstraint, Validation) {
  EXPECT_THROW(GapConstraint(2, 1), Error);
  EXPECT_THROW(GapConstraint(-1, 1), Error);
  EXPECT_NO_THROW(GapConstraint(0, 0));
  try {
    GapConstraint(3, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadConstraint);
  }
}

TEST(GapConstraint, AdmitsAndClamps) {
  const GapConstraint c(1, 3);
  EXPECT_FALSE(c.admits(0));
  EXPECT_TRUE(c.admits(1));
  EXPECT_TRUE(c.admits(3));
  EXPECT_FALSE(c.admits(4));
  EXPECT_EQ(GapConstraint(2, 40).clamped(5), GapConstraint(2, 5));
  EXPECT_EQ(GapConstraint(7, 40).clamped(5), GapConstraint(5, 5));
}

TEST(GapConstraint, Intersect) {
  EXPECT_EQ(intersect({0, 3}, {2, 5}), GapConstraint(2, 3));
  EXPECT_FALSE(intersect({0, 1}, {2, 5}).has_value());
}

TEST(Tuples, IsIncreasing) {
  EXPECT_TRUE(is_increasing(GapTuple{{2, 3}, {1, 4}, {0, 4}}));
  EXPECT_TRUE(is_increasing(GapTuple{}));
  EXPECT_FALSE(is_increasing(GapTuple{{0, 2}, {0, 1}}));
  EXPECT_TRUE(is_increasing(GapTuple{{1, 1}, {0, 2}}));
}

TEST(Tuples, IsSynchronized) {
  EXPECT_TRUE(is_synchronized(kSyncTuple));
  EXPECT_TRUE(is_synchronized(GapTuple(6, GapConstraint(1, 2))));
  EXPECT_FALSE(is_synchronized(GapTuple{{0, 1}, {0, 3}, {0, 1}, {0, 2}}));
  EXPECT_TRUE(is_synchronized(GapTuple{{1, 1}, {0, 2}}));
}

TEST(Tuples, SwappingTwoEntriesOfTheSynchronizedExampleBreaksIt) {
  GapTuple swapped = kSyncTuple;
  std::swap(swapped[1], swapped[6]);
  EXPECT_FALSE(is_synchronized(swapped));
}

TEST(Tuples, SynchronizedDoesNotImplyIncreasing) {
  EXPECT_TRUE(is_synchronized(kSyncTuple));
  EXPECT_FALSE(is_increasing(kSyncTuple));
}

// Equal entries of an increasing tuple enclose a constant run, so every
// increasing tuple is synchronized.
TEST(Tuples, IncreasingImpliesSynchronized) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const ProblemInstance inst = test::random_instance(seed, Variant::MC_INC, 1, 12, 2);
    ASSERT_TRUE(is_increasing(*inst.gaps));
    EXPECT_TRUE(is_synchronized(*inst.gaps)) << "seed " << seed;
  }
}

// Synchronization compared against the definition over all pairs.
TEST(Tuples, SynchronizedMatchesPairwiseDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    GapTuple tuple;
    const Index t = test::uniform(rng, 0, 7);
    for (Index p = 0; p < t; ++p) {
      const Bound l = test::uniform(rng, 0, 2);
      tuple.emplace_back(l, l + test::uniform(rng, 0, 2));
    }
    bool expected = true;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < tuple.size(); ++j) {
        if (tuple[i] != tuple[j]) continue;
        for (std::size_t e = 1; j + e < tuple.size(); ++e) expected = expected && tuple[i + e].within(tuple[j + e]);
      }
    }
    EXPECT_EQ(is_synchronized(tuple), expected) << "trial " << trial;
  }
}

TEST(LabelTuple, Examples) {
  const LabeledTuple two = label_tuple(GapTuple{{0, 1}, {0, 2}, {0, 1}});
  EXPECT_EQ(two.distinct(), (std::vector<GapConstraint>{{0, 1}, {0, 2}}));
  EXPECT_EQ(two.label(1), 1);
  EXPECT_EQ(two.label(2), 2);
  EXPECT_EQ(two.label(3), 1);

  const LabeledTuple constant = label_tuple(GapTuple(5, GapConstraint(2, 3)));
  EXPECT_EQ(constant.h(), 1);
  for (Index p = 1; p <= 5; ++p) EXPECT_EQ(constant.label(p), 1);

  EXPECT_EQ(label_tuple(kSyncTuple).h(), 5);
}

TEST(LabelTuple, RoundTripProperty) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    // Half of the tuples use large values to exercise the comparison sort.
    const Bound range = trial % 2 == 0 ? 6 : Bound{1} << 40;
    GapTuple tuple;
    const Index t = test::uniform(rng, 0, 30);
    for (Index p = 0; p < t; ++p) {
      const Bound a = std::uniform_int_distribution<Bound>(0, range)(rng);
      const Bound b = std::uniform_int_distribution<Bound>(0, range)(rng);
      tuple.emplace_back(std::min(a, b), std::max(a, b));
    }
    const LabeledTuple labeled = label_tuple(tuple);
    ASSERT_TRUE(std::is_sorted(labeled.distinct().begin(), labeled.distinct().end()));
    ASSERT_EQ(std::adjacent_find(labeled.distinct().begin(), labeled.distinct().end()), labeled.distinct().end());
    for (Index p = 1; p <= t; ++p) {
      ASSERT_EQ(labeled.constraint(labeled.label(p)), tuple[static_cast<std::size_t>(p - 1)]) << "trial " << trial;
    }
  }
}

TEST(Variant, NamesRoundTrip) {
  for (Variant v : {Variant::MC, Variant::MC_INC, Variant::OneC, Variant::O1C_SYNC, Variant::SIGMA, Variant::SIGMA_L,
                    Variant::SIGMA_R, Variant::BR, Variant::CLASSIC}) {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_EQ(parse_variant("SIGMA_R"), Variant::SIGMA_R);
  EXPECT_THROW(parse_variant("lcs"), Error);
}

ProblemInstance mc_instance(std::string_view v, std::string_view w, GapTuple gaps) {
  ProblemInstance inst;
  inst.v = text_word(v);
  inst.w = text_word(w);
  inst.variant = Variant::MC;
  inst.gaps = std::move(gaps);
  return inst;
}

ErrorCode code_of(const ProblemInstance& inst) {
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validation to fail";
  return ErrorCode::BadInput;
}

TEST(Validate, ClampsBoundsToTheLongerWord) {
  const ProblemInstance inst = validate_instance(mc_instance("abc", "ab", {{0, 9}, {7, 8}}));
  EXPECT_EQ(inst.sigma, 3);
  EXPECT_EQ((*inst.gaps)[0], GapConstraint(0, 3));
  EXPECT_EQ((*inst.gaps)[1], GapConstraint(3, 3));
}

TEST(Validate, Errors) {
  EXPECT_EQ(code_of(mc_instance("abc", "ab", {{0, 1}})), ErrorCode::BadTupleLength);

  ProblemInstance missing = mc_instance("ab", "ab", {});
  missing.gaps.reset();
  EXPECT_EQ(code_of(missing), ErrorCode::MissingField);

  ProblemInstance small_sigma = mc_instance("ac", "ab", {{0, 1}});
  small_sigma.sigma = 2;
  EXPECT_EQ(code_of(small_sigma), ErrorCode::BadInput);

  ProblemInstance one_c = mc_instance("abc", "abc", {{0, 1}, {0, 2}});
  one_c.variant = Variant::OneC;
  EXPECT_EQ(code_of(one_c), ErrorCode::BadConstraint);

  ProblemInstance br = mc_instance("abc", "ab", {});
  br.variant = Variant::BR;
  EXPECT_EQ(code_of(br), ErrorCode::MissingField);
  br.range_bound = 4;
  EXPECT_EQ(code_of(br), ErrorCode::OutOfRange);
  br.range_bound = 0;
  EXPECT_EQ(code_of(br), ErrorCode::OutOfRange);

  ProblemInstance sigma = mc_instance("ab", "ab", {});
  sigma.variant = Variant::SIGMA;
  EXPECT_EQ(code_of(sigma), ErrorCode::MissingField);
  sigma.sigma_constraints = SigmaConstraints{{}, {GapConstraint(0, 1)}};
  EXPECT_EQ(code_of(sigma), ErrorCode::MissingField);
}

TEST(Validate, OneCAcceptsASingleConstraint) {
  ProblemInstance inst = mc_instance("abcd", "abcd", {{1, 2}});
  inst.variant = Variant::OneC;
  EXPECT_EQ(*validate_instance(inst).gaps, GapTuple(3, GapConstraint(1, 2)));
}

TEST(Validate, EmptyWordsAreNotErrors) {
  ProblemInstance inst = mc_instance("", "abc", {});
  const ProblemInstance checked = validate_instance(inst);
  EXPECT_EQ(checked.notes.size(), 1U);
  inst.variant = Variant::BR;
  inst.range_bound = 99;
  EXPECT_NO_THROW(validate_instance(inst));
}

TEST(Validate, FillsMissingLettersWithTrivialConstraints) {
  ProblemInstance inst;
  inst.v = Word({1, 2, 3});
  inst.w = Word({3, 2});
  inst.variant = Variant::SIGMA_R;
  inst.sigma_constraints = SigmaConstraints{{}, {GapConstraint(1, 1)}};
  const ProblemInstance checked = validate_instance(inst);
  EXPECT_EQ(checked.sigma_constraints->right,
            (std::vector<GapConstraint>{{1, 1}, {0, 3}, {0, 3}}));
  EXPECT_EQ(checked.sigma_constraints->left, std::vector<GapConstraint>(3, GapConstraint(0, 3)));
}

TEST(Validate, IgnoredSideIsResetWithANote) {
  ProblemInstance inst;
  inst.v = Word({1, 2});
  inst.w = Word({1, 2});
  inst.variant = Variant::SIGMA_R;
  inst.sigma_constraints = SigmaConstraints{{GapConstraint(1, 1)}, {GapConstraint(0, 1)}};
  const ProblemInstance checked = validate_instance(inst);
  EXPECT_EQ(checked.sigma_constraints->left, std::vector<GapConstraint>(2, GapConstraint(0, 2)));
  EXPECT_EQ(checked.notes.size(), 1U);
}

void expect_same(const ProblemInstance& a, const ProblemInstance& b) {
  EXPECT_EQ(a.v, b.v);
  EXPECT_EQ(a.w, b.w);
  EXPECT_EQ(a.variant, b.variant);
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.gaps, b.gaps);
  EXPECT_EQ(a.sigma_constraints.has_value(), b.sigma_constraints.has_value());
  if (a.sigma_constraints && b.sigma_constraints) {
    EXPECT_EQ(a.sigma_constraints->left, b.sigma_constraints->left);
    EXPECT_EQ(a.sigma_constraints->right, b.sigma_constraints->right);
  }
  EXPECT_EQ(a.range_bound, b.range_bound);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(Validate, IsIdempotent) {
  const Variant variants[] = {Variant::MC,      Variant::MC_INC,  Variant::OneC, Variant::O1C_SYNC, Variant::SIGMA,
                              Variant::SIGMA_L, Variant::SIGMA_R, Variant::BR,   Variant::CLASSIC};
  std::uint64_t seed = 100;
  for (Variant variant : variants) {
    for (int trial = 0; trial < 50; ++trial) {
      ProblemInstance raw = test::random_instance(seed++, variant, 0, 12, 4, 20);
      const ProblemInstance once = validate_instance(raw);
      expect_same(validate_instance(once), once);
    }
  }
}

}  // namespace
}  // namespace lcsgc
