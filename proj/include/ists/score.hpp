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

#ifndef ISTS_SCORE_HPP_
#define ISTS_SCORE_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ists/core.hpp"
#include "ists/resources.hpp"

namespace ists {

using WordSimilarityFn = std::function<double(std::string_view, std::string_view)>;
using IdfFn = std::function<double(std::string_view)>;

// Idf-weighted best-match similarity, averaged over both directions:
//
//   1/2 * ( sum_{w in C1} max_{v in C2} sim(w,v) idf(w) / sum_{w in C1} idf(w)
//         + sum_{w in C2} max_{v in C1} sim(w,v) idf(w) / sum_{w in C2} idf(w) )
//
// Throws std::invalid_argument for an empty chunk. A side whose idf mass is
// zero is averaged without weights.
double chunk_similarity(const std::vector<std::string>& chunk1,
                        const std::vector<std::string>& chunk2, const WordSimilarityFn& sim,
                        const IdfFn& idf);

// Same with sim = word_similarity and idf from the bundle.
double chunk_similarity(const std::vector<std::string>& chunk1,
                        const std::vector<std::string>& chunk2,
                        const LexicalResources& resources);

inline constexpr double kMinRelationScore = 0.5;
inline constexpr double kMaxRelationScore = 4.9;

// clamp(5 * similarity, 0.5, 4.9)
double similarity_to_score(double similarity);

// EQUI -> 5, ALIC/NOALI -> NIL, any other label -> similarity_to_score of
// the chunk similarity.
void assign_scores(InterpretablePair& pair, const LexicalResources& resources);

// Baseline scoring: EQUI -> 5, everything else NIL.
void assign_baseline_scores(InterpretablePair& pair);

std::vector<std::string> surfaces(const ChunkedSentence& sentence,
                                  const std::vector<int>& indices);

}  // namespace ists

#endif  // ISTS_SCORE_HPP_
