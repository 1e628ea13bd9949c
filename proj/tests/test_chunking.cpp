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

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "ists/chunking.hpp"

using namespace ists;
using ists::testing::chunked;

namespace {

std::vector<ChunkedSentence> conll(const std::string& text) {
  std::istringstream in(text);
  return parse_conll_chunks(in, "mem");
}

std::vector<std::string> texts(const ChunkedSentence& s) {
  std::vector<std::string> out;
  for (const Chunk& c : s.chunks) out.push_back(c.text);
  return out;
}

}  // namespace

TEST_CASE("noun phrase and verb chain spans") {
  const auto sentences = read_conll_file(ists::testing::data_path("girl.conll"));
  REQUIRE(sentences.size() == 1);
  const ChunkedSentence& s = sentences[0];
  CHECK(s.tokens.size() == 5);
  CHECK(texts(s) == std::vector<std::string>{"The girl", "is arriving"});
  CHECK(s.chunks[0].phrase == "NP");
  CHECK(s.chunks[1].phrase == "VP");
  CHECK(s.chunk_of(5) == -1);
  CHECK(*s.tokens[0].pos == "DT");
}

TEST_CASE("all-O sentence has no chunks; blank lines split sentences") {
  const auto s = conll("Hi\tUH\tO\n!\t.\tO\n\nYes\tUH\tO\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0].chunks.empty());
  CHECK(s[1].tokens.size() == 1);
}

TEST_CASE("optional lemma column") {
  const auto s = conll("cats\tNNS\tB-NP\tcat\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].tokens[0].lemma_or_lower() == "cat");
}

TEST_CASE("invalid BIO sequences carry a line number") {
  CHECK_THROWS_WITH_AS(conll("a\tDT\tO\nb\tNN\tI-NP\n"), doctest::Contains("mem:2"),
                       ConllParseError);
  CHECK_THROWS_WITH_AS(conll("a\tDT\tB-VP\nb\tNN\tI-NP\n"), doctest::Contains("mem:2"),
                       ConllParseError);
  CHECK_THROWS_AS(conll("a\tDT\tI-NP\n"), ConllParseError);
  CHECK_THROWS_AS(conll("a\tDT\tX-NP\n"), ConllParseError);
  CHECK_THROWS_AS(conll("a\tDT\n"), ConllParseError);
}

TEST_CASE("preposition followed by noun phrase merges") {
  const auto s = chunked("in NW Pakistan", {{1, 1}, {2, 3}}, {"PP", "NP"});
  const ChunkedSentence m = merge_chunks(s);
  CHECK(texts(m) == std::vector<std::string>{"in NW Pakistan"});
  CHECK(m.chunks[0].phrase == kPrepositionalNounPhrase);
}

TEST_CASE("noun phrases joined by a conjunction merge") {
  const auto s = chunked("Bradley Cooper and JJ Abrams", {{1, 2}, {4, 5}}, {"NP", "NP"});
  CHECK(texts(merge_chunks(s)) == std::vector<std::string>{"Bradley Cooper and JJ Abrams"});
  const auto commas =
      chunked("cats , dogs , and birds", {{1, 1}, {3, 3}, {6, 6}}, {"NP", "NP", "NP"});
  CHECK(texts(merge_chunks(commas)) == std::vector<std::string>{"cats , dogs , and birds"});
}

TEST_CASE("chains merge transitively") {
  const auto s = chunked("in Paris and London", {{1, 1}, {2, 2}, {4, 4}}, {"PP", "NP", "NP"});
  const ChunkedSentence m = merge_chunks(s);
  CHECK(texts(m) == std::vector<std::string>{"in Paris and London"});
}

TEST_CASE("nothing to merge leaves the sentence unchanged") {
  const auto s = chunked("The girl is arriving", {{1, 2}, {3, 4}}, {"NP", "VP"});
  const ChunkedSentence m = merge_chunks(s);
  CHECK(texts(m) == texts(s));
  // A verb between two noun phrases is not a separator.
  const auto v = chunked("cats eat mice", {{1, 1}, {3, 3}}, {"NP", "NP"});
  CHECK(merge_chunks(v).chunks.size() == 2);
}

TEST_CASE("merge never splits, keeps order, and is idempotent") {
  std::mt19937_64 rng(99);
  const char* phrases[] = {"NP", "PP", "VP", "ADJP"};
  const char* words[] = {"in", "the", "and", ",", "city", "runs", "or", "big"};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    std::string text;
    for (int k = 0; k < n; ++k) {
      text += (k ? " " : "") + std::string(words[std::uniform_int_distribution<int>(0, 7)(rng)]);
    }
    ChunkedSentence s = make_sentence(text);
    for (int i = 1; i <= n;) {
      const int len = std::uniform_int_distribution<int>(1, 3)(rng);
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        ++i;  // token outside any chunk
        continue;
      }
      Chunk c;
      for (int k = i; k < std::min(n + 1, i + len); ++k) c.tokens.push_back(k);
      c.text = s.text_of(c.tokens);
      c.phrase = phrases[std::uniform_int_distribution<int>(0, 3)(rng)];
      i += len;
      s.chunks.push_back(std::move(c));
    }
    const ChunkedSentence once = merge_chunks(s);
    const ChunkedSentence twice = merge_chunks(once);
    CHECK(once.chunks.size() <= s.chunks.size());
    REQUIRE(twice.chunks.size() == once.chunks.size());
    for (std::size_t k = 0; k < once.chunks.size(); ++k) {
      CHECK(twice.chunks[k].tokens == once.chunks[k].tokens);
      if (k > 0) CHECK(once.chunks[k].first() > once.chunks[k - 1].last());
    }
    // Every input chunk lies inside one output chunk.
    for (const Chunk& c : s.chunks) {
      const int owner = once.chunk_of(c.first());
      REQUIRE(owner >= 0);
      CHECK(once.chunk_of(c.last()) == owner);
    }
  }
}
