#include "lcsgc/solve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <utility>

#include "lcsgc/bounded_range.hpp"
#include "lcsgc/constant.hpp"
#include "lcsgc/mc.hpp"
#include "lcsgc/sigma.hpp"

namespace lcsgc {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 8> kNames{{
    {Algorithm::Auto, "auto"},
    {Algorithm::Layered, "layered"},
    {Algorithm::SegTree, "segtree"},
    {Algorithm::Deque, "deque"},
    {Algorithm::Rmq, "rmq"},
    {Algorithm::Naive, "naive"},
    {Algorithm::Blocked, "blocked"},
    {Algorithm::Classic, "classic"},
}};

// Allowed algorithms per variant; the first entry is the default.
std::pair<Algorithm, Algorithm> allowed(Variant variant) {
  switch (variant) {
    case Variant::MC:
      return {Algorithm::Layered, Algorithm::SegTree};
    case Variant::MC_INC:
      return {Algorithm::SegTree, Algorithm::Layered};
    case Variant::OneC:
    case Variant::O1C_SYNC:
      return {Algorithm::Deque, Algorithm::Layered};
    case Variant::SIGMA:
    case Variant::SIGMA_L:
    case Variant::SIGMA_R:
      return {Algorithm::Deque, Algorithm::Rmq};
    case Variant::BR:
      return {Algorithm::Blocked, Algorithm::Naive};
    case Variant::CLASSIC:
      return {Algorithm::Classic, Algorithm::Classic};
  }
  return {Algorithm::Classic, Algorithm::Classic};
}

SigmaFlavor flavor(Algorithm algorithm) {
  return algorithm == Algorithm::Rmq ? SigmaFlavor::Rmq : SigmaFlavor::Deque;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [value, name] : kNames) {
    if (value == algorithm) return name;
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [value, text] : kNames) {
    if (text == name) return value;
  }
  throw Error(ErrorCode::UnsupportedAlgorithm, "unknown algorithm '" + std::string(name) + "'");
}

Algorithm resolve_algorithm(const ProblemInstance& inst, Algorithm requested) {
  const auto [preferred, other] = allowed(inst.variant);
  if (requested == Algorithm::Auto) {
    if (uses_sigma_constraints(inst.variant)) {
      const auto m = static_cast<unsigned long long>(std::max<Index>(inst.v.size(), 1));
      const int log_m = std::bit_width(m) - 1;
      return inst.sigma > log_m ? Algorithm::Rmq : Algorithm::Deque;
    }
    return preferred;
  }
  if (requested != preferred && requested != other) {
    throw Error(ErrorCode::UnsupportedAlgorithm, "algorithm '" + std::string(to_string(requested)) +
                                                     "' does not apply to variant '" +
                                                     std::string(to_string(inst.variant)) + "'");
  }
  return requested;
}

SolveResult solve(const ProblemInstance& raw, const SolveOptions& options) {
  const ProblemInstance inst = validate_instance(raw);
  const Algorithm algorithm = resolve_algorithm(inst, options.algorithm);
  const Word& v = inst.v;
  const Word& w = inst.w;

  switch (inst.variant) {
    case Variant::MC:
    case Variant::MC_INC:
      if (algorithm == Algorithm::SegTree) return lcs_mc_inc(v, w, *inst.gaps);
      return lcs_mc(v, w, *inst.gaps, options.want_witness);
    case Variant::OneC:
      if (algorithm == Algorithm::Layered) return lcs_mc(v, w, *inst.gaps, options.want_witness);
      return lcs_1c(v, w, inst.gaps->empty() ? GapConstraint(0, 0) : inst.gaps->front());
    case Variant::O1C_SYNC:
      if (algorithm == Algorithm::Layered) return lcs_mc(v, w, *inst.gaps, options.want_witness);
      return lcs_o1c_sync(v, w, *inst.gaps);
    case Variant::SIGMA_R:
      return lcs_sigma_r(v, w, inst.sigma_constraints->right, flavor(algorithm));
    case Variant::SIGMA_L:
      return lcs_sigma_l(v, w, inst.sigma_constraints->left, flavor(algorithm));
    case Variant::SIGMA:
      return lcs_sigma(v, w, *inst.sigma_constraints, flavor(algorithm));
    case Variant::BR:
      return lcs_br_exact(v, w, inst.range_bound.value_or(1),
                          algorithm == Algorithm::Naive ? RangeStrategy::Naive : RangeStrategy::Blocked,
                          options.threads);
    case Variant::CLASSIC:
      return lcs_classic(v, w, options.want_witness);
  }
  return {};
}

}  // namespace lcsgc
