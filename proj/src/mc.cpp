#include "lcsgc/mc.hpp"

#include <algorithm>
#include <cstdint>

#include "lcsgc/segment_tree_2d.hpp"

namespace lcsgc {

namespace {

using Layer = Grid<std::uint8_t>;
using Counts = Grid<std::int32_t>;

void check_tuple_length(const Word& v, const GapTuple& gaps) {
  if (static_cast<Index>(gaps.size()) != v.size() - 1) {
    throw Error(ErrorCode::BadTupleLength, "gap tuple must have |v| - 1 entries");
  }
}

Layer match_layer(const Word& v, const Word& w) {
  Layer layer(v.size(), w.size());
  for (Index i = 1; i <= v.size(); ++i) {
    for (Index j = 1; j <= w.size(); ++j) layer(i - 1, j - 1) = v.at(i) == w.at(j) ? 1 : 0;
  }
  return layer;
}

// Computes the next layer from `prev` for the constraint of the gap in front
// of the new symbol. `row_sums` and `box_sums` are (m+1) x (n+1) scratch grids
// whose row and column 0 stay zero.
bool next_layer(const Layer& prev, const Layer& matches, const GapConstraint& gap, Counts& row_sums,
                Counts& box_sums, Layer& out) {
  const Index m = prev.rows();
  const Index n = prev.cols();
  const Index lower = gap.lower();
  const Index d = std::min<Index>(gap.upper(), std::max(m, n)) - lower + 1;

  // row_sums(i, j) = prev[i][j-d+1 .. j]
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const std::int32_t leaving = j - d >= 1 ? prev(i - 1, j - d - 1) : 0;
      row_sums(i, j) = row_sums(i, j - 1) - leaving + prev(i - 1, j - 1);
    }
  }
  // box_sums(i, j) = prev[i-d+1 .. i][j-d+1 .. j]
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const std::int32_t leaving = i - d >= 1 ? row_sums(i - d, j) : 0;
      box_sums(i, j) = box_sums(i - 1, j) - leaving + row_sums(i, j);
    }
  }

  bool any = false;
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const Index bi = i - lower - 1;
      const Index bj = j - lower - 1;
      const bool hit = matches(i - 1, j - 1) != 0 && bi >= 1 && bj >= 1 && box_sums(bi, bj) > 0;
      out(i - 1, j - 1) = hit ? 1 : 0;
      any = any || hit;
    }
  }
  return any;
}

Witness backtrack(const Word& v, const std::vector<Layer>& layers, const GapTuple& gaps) {
  const Layer& last = layers.back();
  Index i = 0;
  Index j = 0;
  for (Index r = 0; r < last.rows() && i == 0; ++r) {
    for (Index c = 0; c < last.cols(); ++c) {
      if (last(r, c) != 0) {
        i = r + 1;
        j = c + 1;
        break;
      }
    }
  }

  const auto k = static_cast<Index>(layers.size());
  std::vector<Index> pv{i};
  std::vector<Index> pw{j};
  for (Index p = k; p >= 2; --p) {
    const GapConstraint& gap = gaps[static_cast<std::size_t>(p - 2)];
    const Layer& prev = layers[static_cast<std::size_t>(p - 2)];
    bool found = false;
    for (Index pi = std::max<Index>(1, i - gap.upper() - 1); pi <= i - gap.lower() - 1 && !found; ++pi) {
      for (Index pj = std::max<Index>(1, j - gap.upper() - 1); pj <= j - gap.lower() - 1; ++pj) {
        if (prev(pi - 1, pj - 1) != 0) {
          i = pi;
          j = pj;
          found = true;
          break;
        }
      }
    }
    pv.push_back(i);
    pw.push_back(j);
  }
  std::reverse(pv.begin(), pv.end());
  std::reverse(pw.begin(), pw.end());

  std::vector<Letter> letters;
  for (Index p : pv) letters.push_back(v.at(p));
  return Witness{Word(std::move(letters)), Embedding{std::move(pv)}, Embedding{std::move(pw)}};
}

}  // namespace

SolveResult lcs_mc(const Word& v, const Word& w, const GapTuple& gaps, bool want_witness) {
  SolveResult result;
  if (want_witness) result.witness = Witness{};
  if (v.empty() || w.empty()) return result;
  check_tuple_length(v, gaps);

  const Index m = v.size();
  const Index n = w.size();
  const Layer matches = match_layer(v, w);
  result.stats.layers = 1;
  if ((matches.array() == 0).all()) return result;

  std::vector<Layer> kept;
  if (want_witness) kept.push_back(matches);

  Counts row_sums = Counts::Zero(m + 1, n + 1);
  Counts box_sums = Counts::Zero(m + 1, n + 1);
  Layer current = matches;
  Layer next(m, n);
  result.length = 1;
  for (Index p = 2; p <= std::min(m, n); ++p) {
    ++result.stats.layers;
    if (!next_layer(current, matches, gaps[static_cast<std::size_t>(p - 2)], row_sums, box_sums, next)) break;
    result.length = p;
    std::swap(current, next);
    if (want_witness) kept.push_back(current);
  }

  if (want_witness) result.witness = backtrack(v, kept, gaps);
  return result;
}

SolveResult lcs_mc_inc(const Word& v, const Word& w, const GapTuple& gaps) {
  SolveResult result;
  if (v.empty() || w.empty()) return result;
  check_tuple_length(v, gaps);
  if (!is_increasing(gaps)) throw Error(ErrorCode::NotIncreasing, "gap tuple is not increasing");

  const Index m = v.size();
  const Index n = w.size();
  SegmentTree2D<std::int32_t> tree(m, n);
  for (Index j = 1; j <= n; ++j) {
    if (v.at(1) == w.at(j)) tree.update(1, 1, j, j, 1);
  }
  for (Index i = 1; i <= m; ++i) {
    if (v.at(i) == w.at(1)) tree.update(i, i, 1, 1, 1);
  }

  // A matched cell with no predecessor still starts a length-1 subsequence,
  // and every matched cell (first row and column included) forwards its value.
  const auto t = static_cast<std::int32_t>(gaps.size());
  std::int32_t best = 0;
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      if (v.at(i) != w.at(j)) continue;
      const std::int32_t p = std::max(1, tree.query(i, j));
      best = std::max(best, p);
      if (p <= t) {
        const GapConstraint& gap = gaps[static_cast<std::size_t>(p - 1)];
        tree.update(i + gap.lower() + 1, i + gap.upper() + 1, j + gap.lower() + 1, j + gap.upper() + 1, p + 1);
      }
    }
  }
  result.length = best;
  result.stats.tree_nodes = tree.nodes_touched();
  return result;
}

}  // namespace lcsgc
