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

#ifndef ISTS_CHUNKING_HPP_
#define ISTS_CHUNKING_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ists/core.hpp"

namespace ists {

class ConllParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct ChunkTag {
  enum class Bio { kBegin, kInside, kOutside };
  Bio bio = Bio::kOutside;
  std::string phrase;

  static std::optional<ChunkTag> parse(const std::string& text);
};

// Reads `token TAB pos TAB bio [TAB lemma]` lines, one sentence per block,
// blank lines between blocks. Tokens tagged O stay outside every chunk.
std::vector<ChunkedSentence> parse_conll_chunks(std::istream& in,
                                                const std::string& source = "<stream>");
std::vector<ChunkedSentence> read_conll_file(const std::string& path);

// Label given to a preposition merged with the noun phrase after it.
inline constexpr const char* kPrepositionalNounPhrase = "PNP";

// Joins adjacent chunks until nothing changes:
//   PP NP               -> PNP
//   (NP|PNP) sep+ NP    -> left label, separators absorbed
// where sep is a comma or a coordinating conjunction outside any chunk.
ChunkedSentence merge_chunks(const ChunkedSentence& sentence);

}  // namespace ists

#endif  // ISTS_CHUNKING_HPP_
