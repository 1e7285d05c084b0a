#pragma once

#include <Eigen/Core>

namespace lcsgc {

using Index = Eigen::Index;

/// Dense row-major matrix used for every DP table in the library. Storage is
/// 0-based (Eigen's), while the public structure APIs take 1-based (row, col)
/// coordinates and translate at the boundary.
template <typename Scalar>
using Grid = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace lcsgc
