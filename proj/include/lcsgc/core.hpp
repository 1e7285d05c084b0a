#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcsgc/error.hpp"
#include "lcsgc/grid.hpp"

namespace lcsgc {

using Letter = std::int32_t;
using Bound = std::int64_t;

/// A word over the integer alphabet [1..sigma]. Positions are 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> symbols);

  Index size() const { return static_cast<Index>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  Letter at(Index i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }
  std::span<const Letter> symbols() const { return symbols_; }
  Letter max_letter() const;
  Word reversed() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> symbols_;
};

/// Maps two texts onto one shared integer alphabet, letters numbered by first
/// occurrence (v first). `alphabet[a - 1]` is the character behind letter a.
struct TextPair {
  Word v;
  Word w;
  std::string alphabet;
};
TextPair words_from_text(std::string_view v, std::string_view w);

/// Gap-length constraint (lower, upper): a gap of length g is admitted iff
/// lower <= g <= upper.
class GapConstraint {
 public:
  constexpr GapConstraint() = default;
  GapConstraint(Bound lower, Bound upper);

  Bound lower() const { return lower_; }
  Bound upper() const { return upper_; }
  bool admits(Bound gap) const { return lower_ <= gap && gap <= upper_; }
  /// Interval containment: (a,b) within (c,d) iff c <= a and b <= d.
  bool within(const GapConstraint& outer) const {
    return outer.lower_ <= lower_ && upper_ <= outer.upper_;
  }
  GapConstraint clamped(Bound limit) const;

  friend auto operator<=>(const GapConstraint&, const GapConstraint&) = default;

 private:
  Bound lower_ = 0;
  Bound upper_ = 0;
};

/// Intersection of two constraints; nullopt when it is empty.
std::optional<GapConstraint> intersect(const GapConstraint& a, const GapConstraint& b);

/// Tuple of gap constraints; `gaps[p - 1]` constrains the gap following the
/// p-th symbol of a subsequence.
using GapTuple = std::vector<GapConstraint>;

bool is_increasing(std::span<const GapConstraint> tuple);
bool is_synchronized(std::span<const GapConstraint> tuple);

/// A tuple together with its distinct constraints (sorted) and the class of
/// every position. Positions and classes are both 1-based.
class LabeledTuple {
 public:
  LabeledTuple(GapTuple tuple, std::vector<GapConstraint> distinct, std::vector<int> labels);

  Index size() const { return static_cast<Index>(tuple_.size()); }
  int h() const { return static_cast<int>(distinct_.size()); }
  int label(Index p) const { return labels_[static_cast<std::size_t>(p - 1)]; }
  const GapConstraint& constraint(int r) const { return distinct_[static_cast<std::size_t>(r - 1)]; }
  const GapTuple& tuple() const { return tuple_; }
  const std::vector<GapConstraint>& distinct() const { return distinct_; }

 private:
  GapTuple tuple_;
  std::vector<GapConstraint> distinct_;
  std::vector<int> labels_;
};

LabeledTuple label_tuple(const GapTuple& tuple);

/// Per-letter constraints for the letter-dependent variants. Entry a-1 of
/// each vector belongs to letter a; both vectors cover [1..sigma].
struct SigmaConstraints {
  std::vector<GapConstraint> left;
  std::vector<GapConstraint> right;

  static SigmaConstraints trivial(Letter sigma, Bound n);
  Letter sigma() const { return static_cast<Letter>(right.size()); }
  const GapConstraint& left_of(Letter a) const { return left[static_cast<std::size_t>(a - 1)]; }
  const GapConstraint& right_of(Letter a) const { return right[static_cast<std::size_t>(a - 1)]; }
};

enum class Variant { MC, MC_INC, OneC, O1C_SYNC, SIGMA, SIGMA_L, SIGMA_R, BR, CLASSIC };

std::string_view to_string(Variant variant);
Variant parse_variant(std::string_view name);
bool uses_gap_tuple(Variant variant);
bool uses_sigma_constraints(Variant variant);

struct ProblemInstance {
  Word v;
  Word w;
  Variant variant = Variant::CLASSIC;
  Letter sigma = 0;  // 0 until validated
  std::optional<GapTuple> gaps;
  std::optional<SigmaConstraints> sigma_constraints;
  std::optional<Index> range_bound;
  std::string alphabet;  // non-empty when the words were given as text
  std::vector<std::string> notes;
};

/// Checks field presence and shapes, clamps constraints into [0, max(m,n)] and
/// fills missing per-letter constraints with (0, max(m,n)). Idempotent.
ProblemInstance validate_instance(ProblemInstance inst);

/// Strictly increasing 1-based positions into a word.
struct Embedding {
  std::vector<Index> positions;

  Index size() const { return static_cast<Index>(positions.size()); }
  /// Length of the j-th gap (1-based), i.e. between positions j and j+1.
  Bound gap(Index j) const {
    return positions[static_cast<std::size_t>(j)] - positions[static_cast<std::size_t>(j - 1)] - 1;
  }
};

struct Witness {
  Word subsequence;
  Embedding in_v;
  Embedding in_w;
};

/// Work counters filled in by the solvers; which fields are used depends on
/// the algorithm.
struct SolveStats {
  std::uint64_t deque_pushes = 0;
  std::uint64_t deque_pops = 0;
  std::uint64_t tree_nodes = 0;
  std::uint64_t rmq_cells = 0;
  std::uint64_t layers = 0;
  std::uint64_t block_pairs = 0;
};

struct SolveResult {
  Index length = 0;
  std::optional<Witness> witness;
  SolveStats stats;
};

}  // namespace lcsgc
