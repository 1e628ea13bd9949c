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

#ifndef ISTS_PIPELINE_HPP_
#define ISTS_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ists/core.hpp"
#include "ists/label.hpp"
#include "ists/resources.hpp"
#include "ists/token_align.hpp"

namespace ists {

enum class Preset { kBase, kBasePlus, kFull };
std::optional<Preset> parse_preset(std::string_view name);

enum class ChunkSource { kGold, kConll };
enum class ChunkAlignerMode { kGreedy, kOptimal };
enum class LabelerMode { kBaseline, kModel };

struct PipelineConfig {
  ResourcePaths resources;
  std::string stopwords;  // empty: built-in list
  ChunkSource chunk_source = ChunkSource::kGold;
  std::string conll_sent1;
  std::string conll_sent2;
  bool merge_chunks = false;
  TokenAlignerMode token_aligner = TokenAlignerMode::kIdentity;
  ChunkAlignerMode chunk_aligner = ChunkAlignerMode::kGreedy;
  LabelerMode labeler = LabelerMode::kBaseline;
  std::string model;
  double theta = kDefaultAlignThreshold;
  std::uint64_t seed = 1;
  std::string verbalize_config;

  // key=value file. Unknown keys are a ValidationError.
  static PipelineConfig load(const std::string& path);

  void apply_preset(Preset preset);
  // Lexical alignment and the model labeler need resources; the model
  // labeler needs a model path; CONLL input needs both chunk files.
  void check() const;
};

Stopwords load_stopwords(const PipelineConfig& config);

// Runs the configured components on each pair; input alignments are ignored.
// Every output pair is validated (ValidationError otherwise).
std::vector<InterpretablePair> run_pipeline(const std::vector<InterpretablePair>& input,
                                            const PipelineConfig& config,
                                            LexicalResources& resources,
                                            const LabelModel* model,
                                            const Stopwords& stopwords);

// Feeds every cross-sentence token pair to the distance normalisers.
void observe_pairs(LexicalResources& resources, const std::vector<InterpretablePair>& pairs);

// Pairs built from an id list (one id per line) and two CONLL chunk files
// holding sentence 1 and sentence 2 of each pair in the same order.
std::vector<InterpretablePair> load_conll_pairs(const std::string& ids_path,
                                                const std::string& sent1_path,
                                                const std::string& sent2_path);

// X.wa -> {X.sent1.conll, X.sent2.conll}
std::pair<std::string, std::string> sibling_conll_paths(const std::string& wa_path);

}  // namespace ists

#endif  // ISTS_PIPELINE_HPP_
