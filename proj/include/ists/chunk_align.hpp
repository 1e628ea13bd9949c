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

#ifndef ISTS_CHUNK_ALIGN_HPP_
#define ISTS_CHUNK_ALIGN_HPP_

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "ists/core.hpp"
#include "ists/token_align.hpp"

namespace ists {

// Rows are chunks of sentence 1, columns chunks of sentence 2.
using WeightMatrix = Eigen::MatrixXd;

// (row, col) chunk index pairs, sorted by row.
using ChunkPairs = std::vector<std::pair<int, int>>;

// w(a, b) = aligned tokens crossing (a, b) / mean(|a|, |b|).
WeightMatrix build_weight_matrix(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                                 const TokenAlignment& tokens);

// Takes the largest remaining positive entry until none is left; ties go to
// the smallest (row, col).
ChunkPairs greedy_align(const WeightMatrix& weights);

// Maximum-weight one-to-one assignment; zero-weight pairs are dropped.
ChunkPairs optimal_align(const WeightMatrix& weights);

double total_weight(const WeightMatrix& weights, const ChunkPairs& pairs);

// One record per chunk: aligned pairs first (in sentence-1 order, labelled
// EQUI with a NIL score until labeling), then unaligned chunks of sentence 1
// and of sentence 2. An unaligned chunk is ALIC when one of its tokens has a
// token link, NOALI otherwise.
std::vector<ChunkAlignment> classify_unaligned(const ChunkedSentence& sent1,
                                               const ChunkedSentence& sent2,
                                               const ChunkPairs& aligned,
                                               const TokenAlignment& tokens);

}  // namespace ists

#endif  // ISTS_CHUNK_ALIGN_HPP_
