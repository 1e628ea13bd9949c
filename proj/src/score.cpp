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

#include "ists/score.hpp"

#include <algorithm>
#include <stdexcept>

namespace ists {

namespace {

double directed(const std::vector<std::string>& from, const std::vector<std::string>& to,
                const WordSimilarityFn& sim, const IdfFn& idf) {
  std::vector<double> best(from.size(), 0.0), weight(from.size());
  double mass = 0.0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    for (const std::string& v : to) best[k] = std::max(best[k], sim(from[k], v));
    weight[k] = idf(from[k]);
    mass += weight[k];
  }
  // A chunk made only of zero-idf words falls back to a plain mean.
  if (!(mass > 0.0)) {
    std::fill(weight.begin(), weight.end(), 1.0);
    mass = static_cast<double>(from.size());
  }
  double weighted = 0.0;
  for (std::size_t k = 0; k < from.size(); ++k) weighted += best[k] * weight[k];
  return weighted / mass;
}

}  // namespace

double chunk_similarity(const std::vector<std::string>& chunk1,
                        const std::vector<std::string>& chunk2, const WordSimilarityFn& sim,
                        const IdfFn& idf) {
  if (chunk1.empty() || chunk2.empty()) {
    throw std::invalid_argument("chunk_similarity on an empty chunk");
  }
  return 0.5 * (directed(chunk1, chunk2, sim, idf) + directed(chunk2, chunk1, sim, idf));
}

double chunk_similarity(const std::vector<std::string>& chunk1,
                        const std::vector<std::string>& chunk2,
                        const LexicalResources& resources) {
  return chunk_similarity(
      chunk1, chunk2,
      [&](std::string_view w, std::string_view v) { return word_similarity(resources, w, v); },
      [&](std::string_view w) { return resources.idf_of(w); });
}

double similarity_to_score(double similarity) {
  return std::clamp(kMaxScore * similarity, kMinRelationScore, kMaxRelationScore);
}

std::vector<std::string> surfaces(const ChunkedSentence& sentence,
                                  const std::vector<int>& indices) {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (int index : indices) out.push_back(sentence.token(index).surface);
  return out;
}

void assign_scores(InterpretablePair& pair, const LexicalResources& resources) {
  for (ChunkAlignment& a : pair.alignments) {
    if (!is_relation_label(a.label.core) || !a.aligned()) {
      a.score = std::nullopt;
    } else if (a.label.core == CoreLabel::kEqui) {
      a.score = kMaxScore;
    } else {
      a.score = similarity_to_score(chunk_similarity(
          surfaces(pair.sent1, a.left), surfaces(pair.sent2, a.right), resources));
    }
  }
}

void assign_baseline_scores(InterpretablePair& pair) {
  for (ChunkAlignment& a : pair.alignments) {
    if (a.label.core == CoreLabel::kEqui && a.aligned()) {
      a.score = kMaxScore;
    } else {
      a.score = std::nullopt;
    }
  }
}

}  // namespace ists
