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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "ists/assignment.hpp"
#include "ists/chunk_align.hpp"

using namespace ists;
using ists::testing::chunked;

namespace {

WeightMatrix matrix(std::initializer_list<std::initializer_list<double>> rows) {
  WeightMatrix m(rows.size(), rows.begin()->size());
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Best total over every injective row -> column map (or column -> row).
double brute_force(const WeightMatrix& w) {
  const bool transpose = w.rows() > w.cols();
  const WeightMatrix m = transpose ? WeightMatrix(w.transpose()) : w;
  std::vector<int> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  double best = 0.0;
  do {
    double sum = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) sum += m(r, cols[r]);
    best = std::max(best, sum);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

}  // namespace

TEST_CASE("weight matrix entries") {
  const auto s1 = chunked("a b c d", {{1, 2}, {3, 3}, {4, 4}});
  const auto s2 = chunked("a b x y z", {{1, 2}, {3, 5}});
  TokenAlignment t;
  t.pairs = {{1, 1}, {2, 2}, {3, 4}};
  const WeightMatrix w = build_weight_matrix(s1, s2, t);
  CHECK(w(0, 0) == 1.0);        // 2 of mean(2, 2)
  CHECK(w(1, 1) == 0.5);        // 1 of mean(1, 3)
  CHECK(w(0, 1) == 0.0);
  CHECK(w(2, 0) == 0.0);
  CHECK(w(2, 1) == 0.0);
}

TEST_CASE("greedy picks maxima") {
  CHECK(greedy_align(matrix({{1.0, 0.4}, {0.4, 0.9}})) == ChunkPairs{{0, 0}, {1, 1}});
  CHECK(greedy_align(matrix({{0.0, 0.0}, {0.0, 0.0}})).empty());
}

TEST_CASE("greedy is suboptimal where the assignment is not") {
  const WeightMatrix w = matrix({{0.6, 0.5}, {0.5, 0.1}});
  const ChunkPairs g = greedy_align(w);
  CHECK(g == ChunkPairs{{0, 0}, {1, 1}});
  CHECK(total_weight(w, g) == doctest::Approx(0.7));
  const ChunkPairs o = optimal_align(w);
  CHECK(o == ChunkPairs{{0, 1}, {1, 0}});
  CHECK(total_weight(w, o) == doctest::Approx(1.0));
}

TEST_CASE("optimal on small and degenerate matrices") {
  CHECK(optimal_align(matrix({{0.3}})) == ChunkPairs{{0, 0}});
  CHECK(optimal_align(matrix({{0.0}})).empty());
  CHECK(optimal_align(WeightMatrix(0, 3)).empty());
  CHECK(optimal_align(matrix({{0.0, 0.2, 0.0}})) == ChunkPairs{{0, 1}});
}

TEST_CASE("greedy breaks ties by row then column") {
  CHECK(greedy_align(matrix({{0.5, 0.5}, {0.5, 0.5}})) == ChunkPairs{{0, 0}, {1, 1}});
}

TEST_CASE("min cost assignment on a known case") {
  Eigen::Matrix3d cost;
  cost << 4, 1, 3, 2, 0, 5, 3, 2, 2;
  const std::vector<int> a = min_cost_assignment(cost);
  double sum = 0.0;
  for (int r = 0; r < 3; ++r) sum += cost(r, a[r]);
  CHECK(sum == 5.0);
}

TEST_CASE("random 6x6 matrices match the permutation oracle") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> cell(0, 64);
  for (int trial = 0; trial < 100; ++trial) {
    WeightMatrix w(6, 6);
    for (Eigen::Index k = 0; k < w.size(); ++k) w(k) = cell(rng) / 64.0;
    CHECK(total_weight(w, optimal_align(w)) == brute_force(w));
  }
}

TEST_CASE("classify unaligned chunks") {
  const auto s1 = chunked("a b c", {{1, 1}, {2, 2}, {3, 3}});
  const auto s2 = chunked("a b", {{1, 2}});
  TokenAlignment t;
  t.pairs = {{1, 1}, {2, 2}};
  const auto w = build_weight_matrix(s1, s2, t);
  const auto records = classify_unaligned(s1, s2, optimal_align(w), t);
  REQUIRE(records.size() == 3);
  CHECK(records[0].aligned());
  // "b" links into the consumed chunk: ALIC. "c" has no link: NOALI.
  CHECK(records[1].left == std::vector<int>{2});
  CHECK(records[1].label.core == CoreLabel::kAlic);
  CHECK(records[2].label.core == CoreLabel::kNoali);
  CHECK(records[2].right_null());
  for (const auto& r : records) CHECK_FALSE(r.score);
}

TEST_CASE("fully aligned sentences produce no unaligned records") {
  const auto s = chunked("a b c", {{1, 1}, {2, 3}});
  const TokenAlignment t = align_identical_tokens(s, s);
  const auto records = classify_unaligned(s, s, greedy_align(build_weight_matrix(s, s, t)), t);
  REQUIRE(records.size() == 2);
  for (const auto& r : records) CHECK(r.aligned());
}
