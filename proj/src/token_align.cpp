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

#include "ists/token_align.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ists/assignment.hpp"

namespace ists {

bool TokenAlignment::has_left(int i) const {
  return std::any_of(pairs.begin(), pairs.end(), [i](const auto& p) { return p.first == i; });
}

bool TokenAlignment::has_right(int j) const {
  return std::any_of(pairs.begin(), pairs.end(), [j](const auto& p) { return p.second == j; });
}

bool TokenAlignment::is_one_to_one() const {
  std::set<int> left, right;
  for (const auto& [i, j] : pairs) {
    if (!left.insert(i).second || !right.insert(j).second) return false;
  }
  return true;
}

TokenAlignment align_identical_tokens(const ChunkedSentence& sent1,
                                      const ChunkedSentence& sent2) {
  std::map<std::string, std::vector<int>> occurrences;
  for (const Token& t : sent2.tokens) occurrences[to_lower(t.surface)].push_back(t.index);
  std::map<std::string, std::size_t> used;
  TokenAlignment out;
  for (const Token& t : sent1.tokens) {
    const std::string key = to_lower(t.surface);
    auto it = occurrences.find(key);
    if (it == occurrences.end()) continue;
    std::size_t& k = used[key];
    if (k < it->second.size()) out.pairs.emplace_back(t.index, it->second[k++]);
  }
  return out;
}

TokenAlignment align_lexical_tokens(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                                    const LexicalResources& resources, double threshold) {
  TokenAlignment out = align_identical_tokens(sent1, sent2);

  std::vector<const Token*> rest1, rest2;
  for (const Token& t : sent1.tokens) {
    if (!out.has_left(t.index)) rest1.push_back(&t);
  }
  for (const Token& t : sent2.tokens) {
    if (!out.has_right(t.index)) rest2.push_back(&t);
  }
  if (!rest1.empty() && !rest2.empty()) {
    Eigen::MatrixXd weights(rest1.size(), rest2.size());
    for (std::size_t a = 0; a < rest1.size(); ++a) {
      for (std::size_t b = 0; b < rest2.size(); ++b) {
        double w = rest1[a]->lemma_or_lower() == rest2[b]->lemma_or_lower()
                       ? 1.0
                       : word_similarity(resources, rest1[a]->surface, rest2[b]->surface);
        weights(a, b) = w < threshold ? 0.0 : w;
      }
    }
    const std::vector<int> assignment = max_weight_assignment(weights);
    for (std::size_t a = 0; a < rest1.size(); ++a) {
      const int b = assignment[a];
      if (b >= 0 && weights(a, b) > 0.0) out.pairs.emplace_back(rest1[a]->index, rest2[b]->index);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

TokenAlignment align_tokens(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                            TokenAlignerMode mode, const LexicalResources* resources,
                            double threshold) {
  if (mode == TokenAlignerMode::kIdentity) return align_identical_tokens(sent1, sent2);
  if (!resources) throw std::invalid_argument("lexical token alignment needs lexical resources");
  return align_lexical_tokens(sent1, sent2, *resources, threshold);
}

}  // namespace ists
