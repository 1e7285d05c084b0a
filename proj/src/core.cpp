#include "lcsgc/core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>

namespace lcsgc {

Word::Word(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {
  for (Letter s : symbols_) {
    if (s < 1) throw Error(ErrorCode::BadInput, "letters must be positive integers");
  }
}

Letter Word::max_letter() const {
  return symbols_.empty() ? 0 : *std::max_element(symbols_.begin(), symbols_.end());
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(symbols_.rbegin(), symbols_.rend()));
}

TextPair words_from_text(std::string_view v, std::string_view w) {
  std::array<Letter, 256> code{};
  TextPair out;
  auto encode = [&](std::string_view text) {
    std::vector<Letter> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
      auto& slot = code[static_cast<unsigned char>(c)];
      if (slot == 0) {
        out.alphabet.push_back(c);
        slot = static_cast<Letter>(out.alphabet.size());
      }
      symbols.push_back(slot);
    }
    return Word(std::move(symbols));
  };
  out.v = encode(v);
  out.w = encode(w);
  return out;
}

GapConstraint::GapConstraint(Bound lower, Bound upper) : lower_(lower), upper_(upper) {
  if (lower < 0 || lower > upper) {
    throw Error(ErrorCode::BadConstraint, "gap constraint (" + std::to_string(lower) + "," +
                                              std::to_string(upper) + ") needs 0 <= lower <= upper");
  }
}

GapConstraint GapConstraint::clamped(Bound limit) const {
  return GapConstraint(std::min(lower_, limit), std::min(upper_, limit));
}

std::optional<GapConstraint> intersect(const GapConstraint& a, const GapConstraint& b) {
  const Bound lo = std::max(a.lower(), b.lower());
  const Bound hi = std::min(a.upper(), b.upper());
  if (lo > hi) return std::nullopt;
  return GapConstraint(lo, hi);
}

bool is_increasing(std::span<const GapConstraint> tuple) {
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (!tuple[i - 1].within(tuple[i])) return false;
  }
  return true;
}

// Containment is transitive, so for every constraint it is enough to compare
// each occurrence with the previous occurrence of the same value.
bool is_synchronized(std::span<const GapConstraint> tuple) {
  std::map<GapConstraint, std::size_t> last_seen;
  const std::size_t t = tuple.size();
  for (std::size_t j = 0; j < t; ++j) {
    auto [it, fresh] = last_seen.try_emplace(tuple[j], j);
    if (fresh) continue;
    const std::size_t i = it->second;
    for (std::size_t e = 1; j + e < t; ++e) {
      if (!tuple[i + e].within(tuple[j + e])) return false;
    }
    it->second = j;
  }
  return true;
}

LabeledTuple::LabeledTuple(GapTuple tuple, std::vector<GapConstraint> distinct, std::vector<int> labels)
    : tuple_(std::move(tuple)), distinct_(std::move(distinct)), labels_(std::move(labels)) {}

namespace {

// Stable counting sort of position indices by key(position).
template <typename Key>
std::vector<std::size_t> counting_sort(const std::vector<std::size_t>& order, std::size_t range, Key key) {
  std::vector<std::size_t> count(range + 1, 0);
  for (std::size_t p : order) ++count[static_cast<std::size_t>(key(p)) + 1];
  for (std::size_t k = 1; k <= range; ++k) count[k] += count[k - 1];
  std::vector<std::size_t> out(order.size());
  for (std::size_t p : order) out[count[static_cast<std::size_t>(key(p))]++] = p;
  return out;
}

}  // namespace

LabeledTuple label_tuple(const GapTuple& tuple) {
  const std::size_t t = tuple.size();
  std::vector<std::size_t> order(t);
  for (std::size_t p = 0; p < t; ++p) order[p] = p;

  Bound max_value = 0;
  for (const auto& c : tuple) max_value = std::max(max_value, c.upper());
  const std::size_t range = static_cast<std::size_t>(max_value) + 1;

  // Two LSD radix passes when the values are small (always the case after
  // clamping to the word length); otherwise a comparison sort.
  if (range <= std::max<std::size_t>(1024, 8 * t)) {
    order = counting_sort(order, range, [&](std::size_t p) { return tuple[p].upper(); });
    order = counting_sort(order, range, [&](std::size_t p) { return tuple[p].lower(); });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return tuple[a] < tuple[b]; });
  }

  std::vector<GapConstraint> distinct;
  std::vector<int> labels(t, 0);
  for (std::size_t p : order) {
    if (distinct.empty() || distinct.back() != tuple[p]) distinct.push_back(tuple[p]);
    labels[p] = static_cast<int>(distinct.size());
  }
  return LabeledTuple(tuple, std::move(distinct), std::move(labels));
}

SigmaConstraints SigmaConstraints::trivial(Letter sigma, Bound n) {
  const auto size = static_cast<std::size_t>(std::max<Letter>(sigma, 0));
  return SigmaConstraints{std::vector<GapConstraint>(size, GapConstraint(0, n)),
                          std::vector<GapConstraint>(size, GapConstraint(0, n))};
}

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 9> kVariantNames{{
    {Variant::MC, "mc"},
    {Variant::MC_INC, "mc-inc"},
    {Variant::OneC, "1c"},
    {Variant::O1C_SYNC, "o1c-sync"},
    {Variant::SIGMA, "sigma"},
    {Variant::SIGMA_L, "sigma-l"},
    {Variant::SIGMA_R, "sigma-r"},
    {Variant::BR, "br"},
    {Variant::CLASSIC, "classic"},
}};

void add_note(ProblemInstance& inst, std::string note) {
  if (std::find(inst.notes.begin(), inst.notes.end(), note) == inst.notes.end()) {
    inst.notes.push_back(std::move(note));
  }
}

bool all_trivial(const std::vector<GapConstraint>& side, Bound limit) {
  return std::all_of(side.begin(), side.end(),
                     [&](const GapConstraint& c) { return c.lower() == 0 && c.upper() >= limit; });
}

}  // namespace

std::string_view to_string(Variant variant) {
  for (const auto& [v, name] : kVariantNames) {
    if (v == variant) return name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return c == '_' ? '-' : static_cast<char>(std::tolower(c)); });
  for (const auto& [v, n] : kVariantNames) {
    if (n == lower) return v;
  }
  throw Error(ErrorCode::BadInput, "unknown variant '" + std::string(name) + "'");
}

bool uses_gap_tuple(Variant variant) {
  return variant == Variant::MC || variant == Variant::MC_INC || variant == Variant::OneC ||
         variant == Variant::O1C_SYNC;
}

bool uses_sigma_constraints(Variant variant) {
  return variant == Variant::SIGMA || variant == Variant::SIGMA_L || variant == Variant::SIGMA_R;
}

ProblemInstance validate_instance(ProblemInstance inst) {
  const Index m = inst.v.size();
  const Index n = inst.w.size();
  const Bound limit = std::max(m, n);
  const bool empty = m == 0 || n == 0;

  const Letter max_letter = std::max(inst.v.max_letter(), inst.w.max_letter());
  if (inst.sigma == 0) inst.sigma = max_letter;
  if (inst.sigma < max_letter) {
    throw Error(ErrorCode::BadInput, "a letter exceeds the declared alphabet size");
  }
  if (empty) add_note(inst, "empty word: the answer is 0");

  if (uses_gap_tuple(inst.variant)) {
    if (!inst.gaps) throw Error(ErrorCode::MissingField, "variant requires 'gaps'");
    GapTuple& gaps = *inst.gaps;
    for (auto& c : gaps) c = c.clamped(limit);
    const auto expected = static_cast<std::size_t>(std::max<Index>(m - 1, 0));
    if (inst.variant == Variant::OneC) {
      if (gaps.size() == 1 && expected != 1) gaps.assign(expected, gaps.front());
      if (std::adjacent_find(gaps.begin(), gaps.end(), std::not_equal_to<>()) != gaps.end()) {
        throw Error(ErrorCode::BadConstraint, "1c requires identical constraints");
      }
    }
    if (m > 0 && gaps.size() != expected) {
      throw Error(ErrorCode::BadTupleLength, "expected " + std::to_string(expected) +
                                                 " gap constraints, got " + std::to_string(gaps.size()));
    }
  }

  if (uses_sigma_constraints(inst.variant)) {
    if (!inst.sigma_constraints) throw Error(ErrorCode::MissingField, "variant requires 'left'/'right'");
    SigmaConstraints& sc = *inst.sigma_constraints;
    const bool need_left = inst.variant != Variant::SIGMA_R;
    const bool need_right = inst.variant != Variant::SIGMA_L;
    if (inst.sigma > 0 && need_left && sc.left.empty()) {
      throw Error(ErrorCode::MissingField, "variant requires 'left'");
    }
    if (inst.sigma > 0 && need_right && sc.right.empty()) {
      throw Error(ErrorCode::MissingField, "variant requires 'right'");
    }
    const auto size = static_cast<std::size_t>(inst.sigma);
    for (auto* side : {&sc.left, &sc.right}) {
      for (auto& c : *side) c = c.clamped(limit);
      side->resize(size, GapConstraint(0, limit));
    }
    if (!need_left && !all_trivial(sc.left, limit)) {
      add_note(inst, "sigma-r ignores 'left'");
      sc.left.assign(size, GapConstraint(0, limit));
    }
    if (!need_right && !all_trivial(sc.right, limit)) {
      add_note(inst, "sigma-l ignores 'right'");
      sc.right.assign(size, GapConstraint(0, limit));
    }
  }

  if (inst.variant == Variant::BR) {
    if (!inst.range_bound) throw Error(ErrorCode::MissingField, "variant requires 'B'");
    if (!empty && (*inst.range_bound < 1 || *inst.range_bound > limit)) {
      throw Error(ErrorCode::OutOfRange, "B must lie in [1, " + std::to_string(limit) + "]");
    }
  }
  return inst;
}

}  // namespace lcsgc
