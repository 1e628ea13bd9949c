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
#include <random>

#include "helpers.hpp"
#include "ists/token_align.hpp"

using namespace ists;
using Pairs = std::vector<std::pair<int, int>>;

TEST_CASE("identity alignment on the bus accident sentences") {
  const auto s1 = make_sentence("12 killed in bus accident in Pakistan");
  const auto s2 = make_sentence("10 killed in road accident in NW Pakistan");
  const TokenAlignment t = align_identical_tokens(s1, s2);
  CHECK(t.pairs == Pairs{{2, 2}, {3, 3}, {5, 5}, {6, 6}, {7, 8}});
  CHECK(t.is_one_to_one());
}

TEST_CASE("identity alignment of identical sentences is the identity") {
  const auto s = make_sentence("the cat saw The cat");
  const TokenAlignment t = align_identical_tokens(s, s);
  CHECK(t.pairs == Pairs{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
}

TEST_CASE("lexical alignment picks up similar words above the threshold") {
  LexicalResources r;
  r.paraphrases = ParaphraseTable{};
  r.paraphrases->add("cows", "horse", 0.7);
  r.paraphrases->add("grazing", "eating", 0.5);
  const auto s1 = make_sentence("two cows grazing");
  const auto s2 = make_sentence("a horse eating");
  const TokenAlignment t = align_tokens(s1, s2, TokenAlignerMode::kLexical, &r, 0.6);
  CHECK(t.pairs == Pairs{{2, 2}});
  CHECK(align_tokens(s1, s2, TokenAlignerMode::kLexical, &r, 0.5).pairs ==
        Pairs{{2, 2}, {3, 3}});
}

TEST_CASE("lexical alignment matches lemmas") {
  ChunkedSentence s1 = make_sentence("cats sleep");
  ChunkedSentence s2 = make_sentence("a cat");
  s1.tokens[0].lemma = "cat";
  const LexicalResources r;
  CHECK(align_lexical_tokens(s1, s2, r).pairs == Pairs{{1, 2}});
}

TEST_CASE("lexical mode without resources is an error") {
  const auto s = make_sentence("a b");
  CHECK_THROWS_AS(align_tokens(s, s, TokenAlignerMode::kLexical, nullptr), std::invalid_argument);
}

TEST_CASE("identity output is contained in lexical output and both are one-to-one") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  LexicalResources r;
  r.paraphrases = ParaphraseTable{};
  for (const auto& w : vocab) {
    for (const auto& v : vocab) {
      if (w != v) r.paraphrases->add(w, v, std::uniform_real_distribution<double>(0, 1)(rng));
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    auto sentence = [&] {
      std::string text;
      const int n = std::uniform_int_distribution<int>(1, 8)(rng);
      for (int k = 0; k < n; ++k) {
        text += (k ? " " : "") + vocab[std::uniform_int_distribution<int>(0, 5)(rng)];
      }
      return make_sentence(text);
    };
    const auto s1 = sentence(), s2 = sentence();
    const TokenAlignment id = align_identical_tokens(s1, s2);
    const TokenAlignment lex = align_lexical_tokens(s1, s2, r, 0.6);
    CHECK(id.is_one_to_one());
    CHECK(lex.is_one_to_one());
    for (const auto& p : id.pairs) {
      CHECK(std::find(lex.pairs.begin(), lex.pairs.end(), p) != lex.pairs.end());
    }
  }
}
