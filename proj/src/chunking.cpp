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

#include "ists/chunking.hpp"

#include <fstream>
#include <istream>
#include <numeric>

#include "ists/text.hpp"

namespace ists {

std::optional<ChunkTag> ChunkTag::parse(const std::string& text) {
  ChunkTag tag;
  if (text == "O") return tag;
  if (text.size() < 1 || (text[0] != 'B' && text[0] != 'I')) return std::nullopt;
  tag.bio = text[0] == 'B' ? Bio::kBegin : Bio::kInside;
  if (text.size() > 1) {
    if (text[1] != '-' || text.size() == 2) return std::nullopt;
    tag.phrase = text.substr(2);
  }
  return tag;
}

namespace {

void close_sentence(std::vector<ChunkedSentence>& out, ChunkedSentence& current) {
  if (current.tokens.empty()) return;
  std::vector<std::string> surfaces;
  for (const Token& t : current.tokens) surfaces.push_back(t.surface);
  current.raw = join(surfaces, " ");
  for (Chunk& chunk : current.chunks) chunk.text = current.text_of(chunk.tokens);
  out.push_back(std::move(current));
  current = ChunkedSentence{};
}

}  // namespace

std::vector<ChunkedSentence> parse_conll_chunks(std::istream& in, const std::string& source) {
  std::vector<ChunkedSentence> out;
  ChunkedSentence current;
  std::optional<ChunkTag> previous;
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ConllParseError(source + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = split_ws(line);
    if (fields.empty()) {
      close_sentence(out, current);
      previous.reset();
      continue;
    }
    if (fields.size() < 3 || fields.size() > 4) fail("expected token, pos, chunk tag [, lemma]");
    auto tag = ChunkTag::parse(fields[2]);
    if (!tag) fail("invalid chunk tag '" + fields[2] + "'");

    Token token;
    token.index = static_cast<int>(current.tokens.size()) + 1;
    token.surface = fields[0];
    token.pos = fields[1];
    if (fields.size() == 4) token.lemma = fields[3];
    current.tokens.push_back(std::move(token));

    switch (tag->bio) {
      case ChunkTag::Bio::kOutside: break;
      case ChunkTag::Bio::kBegin: {
        Chunk chunk;
        chunk.phrase = tag->phrase;
        chunk.tokens.push_back(current.tokens.back().index);
        current.chunks.push_back(std::move(chunk));
        break;
      }
      case ChunkTag::Bio::kInside:
        if (!previous || previous->bio == ChunkTag::Bio::kOutside ||
            previous->phrase != tag->phrase) {
          fail("I-" + tag->phrase + " does not continue a " + tag->phrase + " chunk");
        }
        current.chunks.back().tokens.push_back(current.tokens.back().index);
        break;
    }
    previous = tag;
  }
  close_sentence(out, current);
  return out;
}

std::vector<ChunkedSentence> read_conll_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_conll_chunks(in, path);
}

namespace {

bool is_separator(const Token& token) {
  const std::string lower = to_lower(token.surface);
  if (lower == "," || lower == "and" || lower == "or" || lower == "nor" || lower == "&") {
    return true;
  }
  return token.pos && *token.pos == "CC";
}

bool nominal(const Chunk& chunk) {
  return chunk.phrase == "NP" || chunk.phrase == kPrepositionalNounPhrase;
}

Chunk span(const ChunkedSentence& sentence, const Chunk& left, const Chunk& right,
           std::string phrase) {
  Chunk merged;
  merged.tokens.resize(right.last() - left.first() + 1);
  std::iota(merged.tokens.begin(), merged.tokens.end(), left.first());
  merged.text = sentence.text_of(merged.tokens);
  merged.phrase = std::move(phrase);
  return merged;
}

// Applies the first rule that fires, scanning left to right.
bool merge_once(ChunkedSentence& sentence) {
  auto& chunks = sentence.chunks;
  for (std::size_t i = 0; i + 1 < chunks.size(); ++i) {
    const Chunk& left = chunks[i];
    const Chunk& right = chunks[i + 1];
    if (right.phrase != "NP") continue;
    std::optional<Chunk> merged;
    if (left.phrase == "PP" && right.first() == left.last() + 1) {
      merged = span(sentence, left, right, kPrepositionalNounPhrase);
    } else if (nominal(left) && right.first() > left.last() + 1) {
      bool separators = true;
      for (int k = left.last() + 1; k < right.first(); ++k) {
        separators = separators && is_separator(sentence.token(k));
      }
      if (separators) merged = span(sentence, left, right, left.phrase);
    }
    if (merged) {
      chunks[i] = std::move(*merged);
      chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

ChunkedSentence merge_chunks(const ChunkedSentence& sentence) {
  ChunkedSentence out = sentence;
  while (merge_once(out)) {
  }
  return out;
}

}  // namespace ists
