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

// Reader and writer for the word-aligner style `.wa` annotation files:
//
//   <sentence id="1" status="">
//   // 12 killed in bus accident in Pakistan
//   // 10 killed in road accident in NW Pakistan
//   <source>
//   1 12 :
//   ...
//   </source>
//   <translation>
//   ...
//   </translation>
//   <alignment>
//   3 4 5 <==> 3 4 5 // SPE1 // 4 // in bus accident <==> in road accident
//   0 <==> 6 // NOALI // NIL // -not aligned- <==> today
//   </alignment>
//   </sentence>
//
// Chunks are not listed explicitly: every non-null token set of an
// alignment record is a chunk of its sentence.

#ifndef ISTS_WA_IO_HPP_
#define ISTS_WA_IO_HPP_

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ists/core.hpp"

namespace ists {

// Thrown for malformed `.wa` input; the message names pair id and line.
class WaParseError : public ParseError {
 public:
  using ParseError::ParseError;
};

std::vector<InterpretablePair> parse_wa(std::istream& in,
                                        const std::string& source = "<stream>");
std::vector<InterpretablePair> read_wa_file(const std::string& path);

// Writing requires every pair to pass validate_pair unless `force` is set.
void write_wa(std::ostream& out, const std::vector<InterpretablePair>& pairs,
              bool force = false);
std::string write_wa(const std::vector<InterpretablePair>& pairs, bool force = false);
void write_wa_file(const std::string& path, const std::vector<InterpretablePair>& pairs,
                   bool force = false);

std::string format_score(const AlignmentScore& score);

struct DatasetStats {
  // Score bins over aligned pairs: [5], [4,5), [3,4), [2,3), [1,2), [0,1).
  static constexpr std::array<const char*, 6> kBinNames = {
      "[5]", "[4,5)", "[3,4)", "[2,3)", "[1,2)", "[0,1)"};

  long sentence_pairs = 0;
  long sentences = 0;
  long chunks = 0;
  long chunk_tokens = 0;
  long aligned_pairs = 0;
  std::array<long, 6> score_bins{};
  std::map<CoreLabel, long> label_counts;
  long alic = 0;
  long noali = 0;
  long fact = 0;
  long pol = 0;

  double chunks_per_sentence() const;
  double tokens_per_chunk() const;
  long label_count(CoreLabel label) const;

  DatasetStats& operator+=(const DatasetStats& other);
  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats dataset_stats(const std::vector<InterpretablePair>& pairs);

// Aligned table followed by `key=value` lines.
void print_stats(std::ostream& out, const DatasetStats& stats);

}  // namespace ists

#endif  // ISTS_WA_IO_HPP_
