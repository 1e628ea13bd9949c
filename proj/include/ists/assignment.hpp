// Copyright 2026 The ists Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Kuhn-Munkres (Hungarian) assignment on dense Eigen matrices.

#ifndef ISTS_ASSIGNMENT_HPP_
#define ISTS_ASSIGNMENT_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <limits>
#include <vector>

namespace ists {

// Minimum-cost perfect assignment of a square cost matrix, O(n^3) with row
// and column potentials. Returns the column assigned to each row.
template <typename Derived>
std::vector<int> min_cost_assignment(const Eigen::MatrixBase<Derived>& cost) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(cost.rows());
  eigen_assert(cost.rows() == cost.cols());
  const Scalar inf = std::numeric_limits<Scalar>::has_infinity
                         ? std::numeric_limits<Scalar>::infinity()
                         : std::numeric_limits<Scalar>::max();

  // 1-based, index 0 is the virtual column that seeds each augmentation.
  std::vector<Scalar> u(n + 1, Scalar(0)), v(n + 1, Scalar(0));
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::vector<Scalar> min_slack(n + 1, inf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = row_of[j0];
      Scalar delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Scalar slack = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> col_of(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (row_of[j] > 0) col_of[row_of[j] - 1] = j - 1;
  }
  return col_of;
}

// Maximum-total-weight one-to-one assignment of a rectangular, nonnegative
// weight matrix. The matrix is padded with zero rows or columns; rows
// matched to padding come back as -1.
template <typename Derived>
std::vector<int> max_weight_assignment(const Eigen::MatrixBase<Derived>& weights) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = weights.rows();
  const Eigen::Index cols = weights.cols();
  if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);

  const Eigen::Index n = std::max(rows, cols);
  const Scalar top = std::max(weights.maxCoeff(), Scalar(0));
  Matrix cost = Matrix::Constant(n, n, top);
  cost.topLeftCorner(rows, cols) = (-weights.derived()).array() + top;

  const std::vector<int> full = min_cost_assignment(cost);
  std::vector<int> out(rows, -1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (full[r] < cols) out[r] = full[r];
  }
  return out;
}

}  // namespace ists

#endif  // ISTS_ASSIGNMENT_HPP_
