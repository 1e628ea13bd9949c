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

#include "ists/chunk_align.hpp"

#include <algorithm>

#include "ists/assignment.hpp"

namespace ists {

WeightMatrix build_weight_matrix(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                                 const TokenAlignment& tokens) {
  const auto rows = static_cast<Eigen::Index>(sent1.chunks.size());
  const auto cols = static_cast<Eigen::Index>(sent2.chunks.size());
  WeightMatrix counts = WeightMatrix::Zero(rows, cols);
  for (const auto& [i, j] : tokens.pairs) {
    const int a = sent1.chunk_of(i);
    const int b = sent2.chunk_of(j);
    if (a >= 0 && b >= 0) counts(a, b) += 1.0;
  }
  for (Eigen::Index a = 0; a < rows; ++a) {
    for (Eigen::Index b = 0; b < cols; ++b) {
      if (counts(a, b) == 0.0) continue;
      const double mean_len =
          (static_cast<double>(sent1.chunks[a].size()) + sent2.chunks[b].size()) / 2.0;
      counts(a, b) /= mean_len;
    }
  }
  return counts;
}

ChunkPairs greedy_align(const WeightMatrix& weights) {
  WeightMatrix remaining = weights;
  ChunkPairs out;
  while (remaining.size() > 0) {
    Eigen::Index best_r = -1, best_c = -1;
    double best = 0.0;
    // Row-major scan with strict '>' keeps the smallest (row, col) on ties.
    for (Eigen::Index r = 0; r < remaining.rows(); ++r) {
      for (Eigen::Index c = 0; c < remaining.cols(); ++c) {
        if (remaining(r, c) > best) {
          best = remaining(r, c);
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0) break;
    out.emplace_back(static_cast<int>(best_r), static_cast<int>(best_c));
    remaining.row(best_r).setZero();
    remaining.col(best_c).setZero();
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChunkPairs optimal_align(const WeightMatrix& weights) {
  const std::vector<int> assignment = max_weight_assignment(weights);
  ChunkPairs out;
  for (std::size_t r = 0; r < assignment.size(); ++r) {
    const int c = assignment[r];
    if (c >= 0 && weights(static_cast<Eigen::Index>(r), c) > 0.0) {
      out.emplace_back(static_cast<int>(r), c);
    }
  }
  return out;
}

double total_weight(const WeightMatrix& weights, const ChunkPairs& pairs) {
  double sum = 0.0;
  for (const auto& [r, c] : pairs) sum += weights(r, c);
  return sum;
}

std::vector<ChunkAlignment> classify_unaligned(const ChunkedSentence& sent1,
                                               const ChunkedSentence& sent2,
                                               const ChunkPairs& aligned,
                                               const TokenAlignment& tokens) {
  std::vector<ChunkAlignment> out;
  std::vector<bool> used1(sent1.chunks.size(), false), used2(sent2.chunks.size(), false);
  ChunkPairs sorted = aligned;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [a, b] : sorted) {
    used1[a] = used2[b] = true;
    ChunkAlignment record;
    record.left = sent1.chunks[a].tokens;
    record.right = sent2.chunks[b].tokens;
    record.label.core = CoreLabel::kEqui;
    out.push_back(std::move(record));
  }

  auto unaligned = [&](const Chunk& chunk, bool left) {
    const bool linked = std::any_of(chunk.tokens.begin(), chunk.tokens.end(), [&](int t) {
      return left ? tokens.has_left(t) : tokens.has_right(t);
    });
    ChunkAlignment record;
    record.left = left ? chunk.tokens : std::vector<int>{kNullToken};
    record.right = left ? std::vector<int>{kNullToken} : chunk.tokens;
    record.label.core = linked ? CoreLabel::kAlic : CoreLabel::kNoali;
    out.push_back(std::move(record));
  };
  for (std::size_t a = 0; a < sent1.chunks.size(); ++a) {
    if (!used1[a]) unaligned(sent1.chunks[a], true);
  }
  for (std::size_t b = 0; b < sent2.chunks.size(); ++b) {
    if (!used2[b]) unaligned(sent2.chunks[b], false);
  }
  return out;
}

}  // namespace ists
