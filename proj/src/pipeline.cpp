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

#include "ists/pipeline.hpp"

#include <charconv>
#include <fstream>

#include "ists/chunk_align.hpp"
#include "ists/chunking.hpp"
#include "ists/score.hpp"
#include "ists/text.hpp"

namespace ists {

std::optional<Preset> parse_preset(std::string_view name) {
  const std::string n = to_lower(name);
  if (n == "base") return Preset::kBase;
  if (n == "base+") return Preset::kBasePlus;
  if (n == "full") return Preset::kFull;
  return std::nullopt;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  PipelineConfig c;
  for (const auto& [key, value] : read_key_values(path)) {
    if (key == "embeddings1") {
      c.resources.embeddings1 = value;
    } else if (key == "embeddings2") {
      c.resources.embeddings2 = value;
    } else if (key == "paraphrase" || key == "paraphrases") {
      c.resources.paraphrases = value;
    } else if (key == "idf") {
      c.resources.idf = value;
    } else if (key == "taxonomy") {
      c.resources.taxonomy = value;
    } else if (key == "ic") {
      c.resources.information_content = value;
    } else if (key == "stopwords") {
      c.stopwords = value;
    } else if (key == "chunk_source") {
      if (value == "gold") {
        c.chunk_source = ChunkSource::kGold;
      } else if (value == "conll") {
        c.chunk_source = ChunkSource::kConll;
      } else {
        throw ValidationError(path + ": chunk_source must be gold or conll");
      }
    } else if (key == "conll_sent1") {
      c.conll_sent1 = value;
    } else if (key == "conll_sent2") {
      c.conll_sent2 = value;
    } else if (key == "theta") {
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), c.theta);
      if (ec != std::errc() || end != value.data() + value.size() || c.theta < 0.0 ||
          c.theta > 1.0) {
        throw ValidationError(path + ": theta must be a number in [0,1]");
      }
    } else if (key == "seed") {
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), c.seed);
      if (ec != std::errc() || end != value.data() + value.size()) {
        throw ValidationError(path + ": seed must be a non-negative integer");
      }
    } else if (key == "model") {
      c.model = value;
    } else if (key == "verbalize_config") {
      c.verbalize_config = value;
    } else {
      throw ValidationError(path + ": unknown key " + key);
    }
  }
  return c;
}

void PipelineConfig::apply_preset(Preset preset) {
  merge_chunks = preset != Preset::kBase;
  token_aligner = preset == Preset::kBase ? TokenAlignerMode::kIdentity : TokenAlignerMode::kLexical;
  chunk_aligner = preset == Preset::kBase ? ChunkAlignerMode::kGreedy : ChunkAlignerMode::kOptimal;
  labeler = preset == Preset::kFull ? LabelerMode::kModel : LabelerMode::kBaseline;
}

void PipelineConfig::check() const {
  const bool needs_resources =
      token_aligner == TokenAlignerMode::kLexical || labeler == LabelerMode::kModel;
  if (needs_resources && !resources.any()) {
    throw ValidationError("lexical alignment and model labeling need at least one resource");
  }
  if (labeler == LabelerMode::kModel && model.empty()) {
    throw ValidationError("model labeling needs model=<path>");
  }
  if (chunk_source == ChunkSource::kConll && (conll_sent1.empty() || conll_sent2.empty())) {
    throw ValidationError("chunk_source=conll needs conll_sent1 and conll_sent2");
  }
}

Stopwords load_stopwords(const PipelineConfig& config) {
  return config.stopwords.empty() ? Stopwords::english() : Stopwords::load(config.stopwords);
}

void observe_pairs(LexicalResources& resources, const std::vector<InterpretablePair>& pairs) {
  if (!resources.has_embeddings1() && !resources.has_embeddings2()) return;
  for (const InterpretablePair& p : pairs) {
    for (const Token& a : p.sent1.tokens) {
      for (const Token& b : p.sent2.tokens) resources.observe(a.surface, b.surface);
    }
  }
}

std::vector<InterpretablePair> run_pipeline(const std::vector<InterpretablePair>& input,
                                            const PipelineConfig& config,
                                            LexicalResources& resources,
                                            const LabelModel* model,
                                            const Stopwords& stopwords) {
  if (config.labeler == LabelerMode::kModel && !model) {
    throw ValidationError("model labeling requested without a model");
  }
  observe_pairs(resources, input);

  std::vector<InterpretablePair> out;
  out.reserve(input.size());
  for (const InterpretablePair& in : input) {
    InterpretablePair p;
    p.id = in.id;
    p.status = in.status;
    p.sent1 = config.merge_chunks ? merge_chunks(in.sent1) : in.sent1;
    p.sent2 = config.merge_chunks ? merge_chunks(in.sent2) : in.sent2;

    const TokenAlignment tokens =
        align_tokens(p.sent1, p.sent2, config.token_aligner, &resources, config.theta);
    const WeightMatrix weights = build_weight_matrix(p.sent1, p.sent2, tokens);
    const ChunkPairs chunks = config.chunk_aligner == ChunkAlignerMode::kGreedy
                                  ? greedy_align(weights)
                                  : optimal_align(weights);
    p.alignments = classify_unaligned(p.sent1, p.sent2, chunks, tokens);

    if (config.labeler == LabelerMode::kBaseline) {
      baseline_label(p.alignments);
    } else {
      model_label(p, *model, resources, stopwords);
      assign_scores(p, resources);
    }

    const auto violations = validate_pair(p);
    if (has_errors(violations)) {
      for (const Violation& v : violations) {
        if (v.severity == Violation::Severity::kError) {
          throw ValidationError("pair " + p.id + ": " + v.message);
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<InterpretablePair> load_conll_pairs(const std::string& ids_path,
                                                const std::string& sent1_path,
                                                const std::string& sent2_path) {
  std::vector<std::string> ids;
  if (!ids_path.empty()) {
    std::ifstream in(ids_path);
    if (!in) throw ParseError("cannot open pair index " + ids_path);
    std::string line;
    while (std::getline(in, line)) {
      const std::string_view id = trim(line);
      if (!id.empty() && id.front() != '#') ids.emplace_back(id);
    }
  }
  const auto s1 = read_conll_file(sent1_path);
  const auto s2 = read_conll_file(sent2_path);
  if (s1.size() != s2.size()) {
    throw ParseError(sent1_path + " and " + sent2_path + " hold different sentence counts");
  }
  if (!ids_path.empty() && ids.size() != s1.size()) {
    throw ParseError(ids_path + ": " + std::to_string(ids.size()) + " ids for " +
                     std::to_string(s1.size()) + " sentence pairs");
  }
  std::vector<InterpretablePair> out(s1.size());
  for (std::size_t k = 0; k < s1.size(); ++k) {
    out[k].id = ids.empty() ? std::to_string(k + 1) : ids[k];
    out[k].sent1 = s1[k];
    out[k].sent2 = s2[k];
  }
  return out;
}

std::pair<std::string, std::string> sibling_conll_paths(const std::string& wa_path) {
  std::string stem = wa_path;
  if (stem.size() > 3 && stem.substr(stem.size() - 3) == ".wa") stem.resize(stem.size() - 3);
  return {stem + ".sent1.conll", stem + ".sent2.conll"};
}

}  // namespace ists
