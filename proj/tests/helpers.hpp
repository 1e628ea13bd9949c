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

// Shared fixtures for the unit and acceptance tests.

#ifndef ISTS_TESTS_HELPERS_HPP_
#define ISTS_TESTS_HELPERS_HPP_

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ists/core.hpp"
#include "ists/wa_io.hpp"

namespace ists::testing {

inline std::string data_path(const std::string& name) {
  return std::string(ISTS_TEST_DATA) + "/" + name;
}

// Tokenizes `text` and makes chunks from inclusive 1-based spans.
inline ChunkedSentence chunked(const std::string& text,
                               std::initializer_list<std::pair<int, int>> spans,
                               std::initializer_list<const char*> phrases = {}) {
  ChunkedSentence s = make_sentence(text);
  auto phrase = phrases.begin();
  for (const auto& [first, last] : spans) {
    Chunk c;
    for (int i = first; i <= last; ++i) c.tokens.push_back(i);
    c.text = s.text_of(c.tokens);
    if (phrase != phrases.end()) c.phrase = *phrase++;
    s.chunks.push_back(std::move(c));
  }
  return s;
}

inline ChunkAlignment record(std::vector<int> left, std::vector<int> right, CoreLabel label,
                             AlignmentScore score, bool fact = false, bool pol = false) {
  ChunkAlignment a;
  a.left = std::move(left);
  a.right = std::move(right);
  a.label = AlignmentLabel{label, fact, pol};
  a.score = score;
  return a;
}

inline InterpretablePair bus_accident() { return read_wa_file(data_path("bus_accident.wa")).at(0); }

// Replaces the alignments of `p` with a random valid set over its chunks:
// some chunks matched one-to-one, the rest NOALI/ALIC.
inline void randomize_alignments(std::mt19937_64& rng, InterpretablePair& p) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  p.alignments.clear();
  std::vector<int> order1(p.sent1.chunks.size()), order2(p.sent2.chunks.size());
  for (std::size_t k = 0; k < order1.size(); ++k) order1[k] = static_cast<int>(k);
  for (std::size_t k = 0; k < order2.size(); ++k) order2[k] = static_cast<int>(k);
  std::shuffle(order1.begin(), order1.end(), rng);
  std::shuffle(order2.begin(), order2.end(), rng);
  const int aligned = uniform(0, static_cast<int>(std::min(order1.size(), order2.size())));
  std::vector<bool> used1(order1.size()), used2(order2.size());
  for (int k = 0; k < aligned; ++k) {
    const int a = order1[k], b = order2[k];
    used1[a] = used2[b] = true;
    const CoreLabel label = kRelationLabels[uniform(0, 5)];
    AlignmentScore score = label == CoreLabel::kEqui ? 5.0 : static_cast<double>(uniform(1, 4));
    p.alignments.push_back(record(p.sent1.chunks[a].tokens, p.sent2.chunks[b].tokens, label,
                                  score, uniform(0, 9) == 0, uniform(0, 9) == 0));
  }
  for (std::size_t a = 0; a < used1.size(); ++a) {
    if (used1[a]) continue;
    p.alignments.push_back(record(p.sent1.chunks[a].tokens, {kNullToken},
                                  uniform(0, 1) ? CoreLabel::kNoali : CoreLabel::kAlic,
                                  std::nullopt));
  }
  for (std::size_t b = 0; b < used2.size(); ++b) {
    if (used2[b]) continue;
    p.alignments.push_back(record({kNullToken}, p.sent2.chunks[b].tokens, CoreLabel::kNoali,
                                  std::nullopt));
  }
}

// Random valid pair: both sentences cut into chunks of 1-3 tokens.
inline InterpretablePair random_pair(std::mt19937_64& rng, const std::string& id) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const std::vector<std::string> vocab = {"a",    "man",  "dog",  "runs", "in",
                                                 "park", "the",  "red",  "car",  "old",
                                                 "two",  "cats", "sits", "on",   "mat"};
  auto sentence = [&]() {
    const int n = uniform(1, 9);
    std::string text;
    for (int k = 0; k < n; ++k) {
      text += (text.empty() ? "" : " ") + vocab[uniform(0, static_cast<int>(vocab.size()) - 1)];
    }
    ChunkedSentence s = make_sentence(text);
    for (int i = 1; i <= n;) {
      const int len = std::min(uniform(1, 3), n - i + 1);
      Chunk c;
      for (int k = 0; k < len; ++k) c.tokens.push_back(i + k);
      c.text = s.text_of(c.tokens);
      s.chunks.push_back(std::move(c));
      i += len;
    }
    return s;
  };
  InterpretablePair p;
  p.id = id;
  p.sent1 = sentence();
  p.sent2 = sentence();
  randomize_alignments(rng, p);
  return p;
}

}  // namespace ists::testing

#endif  // ISTS_TESTS_HELPERS_HPP_
