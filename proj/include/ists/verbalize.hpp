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

#ifndef ISTS_VERBALIZE_HPP_
#define ISTS_VERBALIZE_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ists/core.hpp"

namespace ists {

// Ordered by descending lower bound; a score takes the first band whose
// bound it reaches. The last bound must be 0.
using Bands = std::vector<std::pair<double, std::string>>;

struct VerbalizationConfig {
  bool include_equi = false;
  std::vector<CoreLabel> label_order = {CoreLabel::kOppo, CoreLabel::kSpe1, CoreLabel::kSimi,
                                        CoreLabel::kSpe2, CoreLabel::kRel,  CoreLabel::kEqui};
  // Per relation label; {X}, {Y} are the quoted chunks, {QUAL} the qualifier.
  std::map<CoreLabel, std::string> templates;
  std::map<CoreLabel, Bands> qualifiers;
  Bands openers;
  std::string context_suffix = "in this context";

  static VerbalizationConfig defaults();
  // key=value file: a label name sets its template, "<LABEL>.bands" its
  // qualifiers, plus opener.bands, include_equi and label_order. Bands are
  // written "4:a bit more|3:more|0:much more".
  static VerbalizationConfig load(const std::string& path);

  // Throws ValidationError on a malformed band list.
  void check() const;
};

Bands parse_bands(const std::string& text);
const std::string& band_for(const Bands& bands, double score);

// Token-count weighted mean of the record scores; unaligned chunks count
// with score 0.
double overall_score(const InterpretablePair& pair);

// One sentence body without opener or final period. Throws
// std::invalid_argument for ALIC/NOALI or null-side records.
std::string verbalize_alignment(const InterpretablePair& pair, const ChunkAlignment& record,
                                const VerbalizationConfig& config);

// Opener then one "Note that ..." / "Note also that ..." line per record.
std::string verbalize_pair(const InterpretablePair& pair, const VerbalizationConfig& config);

}  // namespace ists

#endif  // ISTS_VERBALIZE_HPP_
