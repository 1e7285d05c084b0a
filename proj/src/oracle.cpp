#include "lcsgc/oracle.hpp"

#include <string>
#include <vector>

namespace lcsgc {

namespace {

// Whether a symbol at `next` may follow the current embedding `positions`
// (non-empty) of a subsequence of `word`.
bool admits_step(const ProblemInstance& inst, const Word& word, const std::vector<Index>& positions, Index next) {
  const Index last = positions.back();
  const Bound gap = next - last - 1;
  switch (inst.variant) {
    case Variant::MC:
    case Variant::MC_INC:
    case Variant::OneC:
    case Variant::O1C_SYNC:
      return (*inst.gaps)[positions.size() - 1].admits(gap);
    case Variant::SIGMA:
    case Variant::SIGMA_L:
    case Variant::SIGMA_R:
      return inst.sigma_constraints->left_of(word.at(last)).admits(gap) &&
             inst.sigma_constraints->right_of(word.at(next)).admits(gap);
    case Variant::BR:
      return next - positions.front() + 1 <= *inst.range_bound;
    case Variant::CLASSIC:
      return true;
  }
  return false;
}

class Search {
 public:
  explicit Search(const ProblemInstance& inst) : inst_(inst) {}

  SolveResult run() {
    std::vector<Index> pv;
    extend(pv);
    SolveResult result;
    result.length = static_cast<Index>(best_v_.size());
    std::vector<Letter> letters;
    for (Index p : best_v_) letters.push_back(inst_.v.at(p));
    result.witness = Witness{Word(std::move(letters)), Embedding{best_v_}, Embedding{best_w_}};
    return result;
  }

 private:
  void extend(std::vector<Index>& pv) {
    const Index m = inst_.v.size();
    const Index start = pv.empty() ? 1 : pv.back() + 1;
    for (Index i = start; i <= m; ++i) {
      if (static_cast<Index>(pv.size()) + (m - i + 1) <= static_cast<Index>(best_v_.size())) return;
      if (!pv.empty() && !admits_step(inst_, inst_.v, pv, i)) continue;
      pv.push_back(i);
      std::vector<Index> pw;
      // A prefix that does not embed into w has no extension that does.
      if (embeds_in_w(pv, pw)) {
        if (pv.size() > best_v_.size()) {
          best_v_ = pv;
          best_w_ = pw;
        }
        extend(pv);
      }
      pv.pop_back();
    }
  }

  // Lexicographically first admissible embedding of v[pv] into w.
  bool embeds_in_w(const std::vector<Index>& pv, std::vector<Index>& pw) const {
    if (pw.size() == pv.size()) return true;
    const Letter x = inst_.v.at(pv[pw.size()]);
    const Index start = pw.empty() ? 1 : pw.back() + 1;
    for (Index j = start; j <= inst_.w.size(); ++j) {
      if (inst_.w.at(j) != x) continue;
      if (!pw.empty() && !admits_step(inst_, inst_.w, pw, j)) continue;
      pw.push_back(j);
      if (embeds_in_w(pv, pw)) return true;
      pw.pop_back();
    }
    return false;
  }

  const ProblemInstance& inst_;
  std::vector<Index> best_v_;
  std::vector<Index> best_w_;
};

}  // namespace

SolveResult oracle_solve(const ProblemInstance& raw, Index cap) {
  const ProblemInstance inst = validate_instance(raw);
  if (inst.v.size() > cap || inst.w.size() > cap) {
    throw Error(ErrorCode::CapExceeded, "oracle handles words of length at most " + std::to_string(cap));
  }
  return Search(inst).run();
}

bool admits_embedding(const ProblemInstance& inst, const Word& word, const Embedding& embedding) {
  if (inst.gaps && embedding.size() > static_cast<Index>(inst.gaps->size()) + 1) return false;
  std::vector<Index> prefix;
  for (Index p : embedding.positions) {
    if (p < 1 || p > word.size()) return false;
    if (!prefix.empty() && (p <= prefix.back() || !admits_step(inst, word, prefix, p))) return false;
    prefix.push_back(p);
  }
  return true;
}

bool verify_witness(const ProblemInstance& raw, const SolveResult& result) {
  if (!result.witness) return false;
  const ProblemInstance inst = validate_instance(raw);
  const Witness& witness = *result.witness;
  const Index k = witness.subsequence.size();
  if (k != result.length || witness.in_v.size() != k || witness.in_w.size() != k) return false;
  if (!admits_embedding(inst, inst.v, witness.in_v) || !admits_embedding(inst, inst.w, witness.in_w)) return false;
  for (Index p = 1; p <= k; ++p) {
    const Letter x = witness.subsequence.at(p);
    if (inst.v.at(witness.in_v.positions[static_cast<std::size_t>(p - 1)]) != x) return false;
    if (inst.w.at(witness.in_w.positions[static_cast<std::size_t>(p - 1)]) != x) return false;
  }
  return true;
}

}  // namespace lcsgc
