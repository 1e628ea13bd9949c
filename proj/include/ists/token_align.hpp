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

#ifndef ISTS_TOKEN_ALIGN_HPP_
#define ISTS_TOKEN_ALIGN_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "ists/core.hpp"
#include "ists/resources.hpp"

namespace ists {

// One-to-one links between 1-based token indices of the two sentences,
// sorted by the sentence-1 index.
struct TokenAlignment {
  std::vector<std::pair<int, int>> pairs;

  bool has_left(int i) const;
  bool has_right(int j) const;
  bool is_one_to_one() const;
};

// Any aligner producing TokenAlignment can drive chunk alignment.
using TokenAligner =
    std::function<TokenAlignment(const ChunkedSentence&, const ChunkedSentence&)>;

enum class TokenAlignerMode { kIdentity, kLexical };

inline constexpr double kDefaultAlignThreshold = 0.6;

// Lowercased-equal surfaces, k-th occurrence to k-th occurrence.
TokenAlignment align_identical_tokens(const ChunkedSentence& sent1,
                                      const ChunkedSentence& sent2);

// Identical surfaces are anchored first; the remaining tokens are linked
// by a maximum-weight assignment over lemma equality (1.0) or
// word_similarity, with weights below `threshold` zeroed.
TokenAlignment align_lexical_tokens(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                                    const LexicalResources& resources,
                                    double threshold = kDefaultAlignThreshold);

// Throws std::invalid_argument for kLexical without resources.
TokenAlignment align_tokens(const ChunkedSentence& sent1, const ChunkedSentence& sent2,
                            TokenAlignerMode mode, const LexicalResources* resources,
                            double threshold = kDefaultAlignThreshold);

}  // namespace ists

#endif  // ISTS_TOKEN_ALIGN_HPP_
