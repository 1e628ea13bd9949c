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

// ists: chunk alignment, labeling, scoring, evaluation and verbalization.
//
// Exit codes: 0 ok, 2 usage, 3 input parse error, 4 resource error,
// 5 validation failure, 1 anything else.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ists/chunking.hpp"
#include "ists/core.hpp"
#include "ists/eval.hpp"
#include "ists/label.hpp"
#include "ists/pipeline.hpp"
#include "ists/verbalize.hpp"
#include "ists/wa_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;
constexpr int kExitValidation = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int cmd_validate(const std::string& path) {
  const auto pairs = ists::read_wa_file(path);
  long errors = 0;
  for (const auto& p : pairs) {
    for (const auto& v : ists::validate_pair(p)) {
      const bool err = v.severity == ists::Violation::Severity::kError;
      errors += err;
      std::cout << path << ": pair " << p.id << ": " << (err ? "error: " : "note: ") << v.message
                << '\n';
    }
  }
  std::cout << "pairs=" << pairs.size() << " errors=" << errors << '\n';
  return errors ? kExitValidation : 0;
}

int cmd_stats(const std::vector<std::string>& paths) {
  ists::DatasetStats total;
  for (const auto& path : paths) {
    const auto stats = ists::dataset_stats(ists::read_wa_file(path));
    std::cout << "# " << path << '\n';
    ists::print_stats(std::cout, stats);
    total += stats;
  }
  if (paths.size() > 1) {
    std::cout << "# total\n";
    ists::print_stats(std::cout, total);
  }
  return 0;
}

ists::PipelineConfig read_config(const std::string& path) {
  return path.empty() ? ists::PipelineConfig{} : ists::PipelineConfig::load(path);
}

int cmd_pipeline(const std::string& in, const std::string& preset_name,
                 const std::string& config_path, const std::string& out) {
  const auto preset = ists::parse_preset(preset_name);
  if (!preset) throw UsageError("--preset must be base, base+ or full");
  ists::PipelineConfig config = read_config(config_path);
  config.apply_preset(*preset);
  config.check();

  const auto input = config.chunk_source == ists::ChunkSource::kGold
                         ? ists::read_wa_file(in)
                         : ists::load_conll_pairs(in, config.conll_sent1, config.conll_sent2);
  ists::LexicalResources resources = ists::load_resources(config.resources);
  const ists::Stopwords stopwords = ists::load_stopwords(config);
  std::optional<ists::LabelModel> model;
  if (config.labeler == ists::LabelerMode::kModel) {
    model = ists::LabelModel::load_file(config.model);
  }
  const auto output =
      ists::run_pipeline(input, config, resources, model ? &*model : nullptr, stopwords);
  ists::write_wa_file(out, output);
  std::cerr << "wrote " << output.size() << " pairs to " << out << '\n';
  return 0;
}

int cmd_train(const std::vector<std::string>& train_paths, const std::string& mode_name,
              const std::string& config_path, std::optional<std::uint64_t> seed,
              const std::string& out) {
  ists::TrainingMode mode;
  if (mode_name == "gold") {
    mode = ists::TrainingMode::kGold;
  } else if (mode_name == "mixed") {
    mode = ists::TrainingMode::kMixed;
  } else {
    throw UsageError("--mode must be gold or mixed");
  }
  const ists::PipelineConfig config = read_config(config_path);
  ists::LexicalResources resources = ists::load_resources(config.resources);
  const ists::Stopwords stopwords = ists::load_stopwords(config);

  std::vector<ists::Instance> instances;
  for (const auto& path : train_paths) {
    const auto gold = ists::read_wa_file(path);
    ists::observe_pairs(resources, gold);
    ists::TrainingComponents components{&resources, &stopwords, {}};
    std::vector<std::pair<ists::ChunkedSentence, ists::ChunkedSentence>> system;
    if (mode == ists::TrainingMode::kMixed) {
      const auto [c1, c2] = ists::sibling_conll_paths(path);
      const auto s1 = ists::read_conll_file(c1);
      const auto s2 = ists::read_conll_file(c2);
      if (s1.size() != gold.size() || s2.size() != gold.size()) {
        throw ists::ParseError(c1 + ", " + c2 + ": sentence counts differ from " + path);
      }
      for (std::size_t k = 0; k < gold.size(); ++k) {
        system.emplace_back(ists::merge_chunks(s1[k]), ists::merge_chunks(s2[k]));
      }
      std::size_t next = 0;
      components.system_chunker = [&](const ists::InterpretablePair&) { return system[next++]; };
    }
    auto part = ists::build_training_set(gold, mode, components);
    std::cerr << path << ": " << part.size() << " instances\n";
    instances.insert(instances.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }

  ists::TrainOptions options;
  options.seed = seed.value_or(config.seed);
  const ists::TrainResult result = ists::train_labeler(instances, options);
  for (const auto& [lambda, accuracy] : result.cv) {
    std::cout << "lambda=" << lambda << " cv_accuracy=" << accuracy << '\n';
  }
  std::cout << "instances=" << instances.size() << " best_lambda=" << result.model.lambda
            << " cv_accuracy=" << result.model.cv_accuracy << '\n';
  result.model.save_file(out);
  return 0;
}

int cmd_evaluate(const std::string& sys, const std::string& gold, const std::string& level) {
  std::vector<ists::EvalLevel> levels;
  if (level == "all") {
    levels.assign(ists::kEvalLevels.begin(), ists::kEvalLevels.end());
  } else if (auto l = ists::parse_level(level)) {
    levels.push_back(*l);
  } else {
    throw UsageError("--level must be ali, type, score, ts or all");
  }
  const auto report = ists::evaluate(ists::read_wa_file(sys), ists::read_wa_file(gold));
  ists::print_report(std::cout, report, levels);
  return 0;
}

int cmd_confusion(const std::string& sys, const std::string& gold, const std::string& axis) {
  ists::ConfusionAxis a;
  if (axis == "label") {
    a = ists::ConfusionAxis::kLabel;
  } else if (axis == "score") {
    a = ists::ConfusionAxis::kScore;
  } else {
    throw UsageError("--axis must be label or score");
  }
  ists::print_confusion(std::cout, ists::confusion_matrix(ists::read_wa_file(sys),
                                                          ists::read_wa_file(gold), a));
  return 0;
}

int cmd_verbalize(const std::string& in, bool include_equi, const std::string& config_path,
                  const std::string& out) {
  const ists::PipelineConfig config = read_config(config_path);
  ists::VerbalizationConfig vc = config.verbalize_config.empty()
                                     ? ists::VerbalizationConfig::defaults()
                                     : ists::VerbalizationConfig::load(config.verbalize_config);
  if (include_equi) vc.include_equi = true;
  std::ofstream os(out);
  if (!os) throw ists::Error("cannot write '" + out + "'");
  for (const auto& pair : ists::read_wa_file(in)) {
    os << "# " << pair.id << '\n' << ists::verbalize_pair(pair, vc) << "\n\n";
  }
  if (!os) throw ists::Error("cannot write '" + out + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpretable sentence similarity: align, label, score, explain"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "check annotation constraints of a .wa file");
  validate->add_option("file", file)->required();

  std::vector<std::string> stat_files;
  auto* stats = app.add_subcommand("stats", "dataset statistics of .wa files");
  stats->add_option("files", stat_files)->required();

  std::string in, out, preset, config_path, mode = "gold", sys, gold, level = "all", axis;
  std::vector<std::string> train_files;
  std::optional<std::uint64_t> seed;
  bool include_equi = false;

  auto* pipeline = app.add_subcommand("pipeline", "chunk, align, label and score sentence pairs");
  pipeline->add_option("--in", in)->required();
  pipeline->add_option("--preset", preset)->required();
  pipeline->add_option("--config", config_path);
  pipeline->add_option("--out", out)->required();

  auto* train = app.add_subcommand("train", "train the label classifier");
  train->add_option("--train", train_files)->required();
  train->add_option("--mode", mode);
  train->add_option("--config", config_path);
  train->add_option("--seed", seed);
  train->add_option("--out", out)->required();

  auto* evaluate = app.add_subcommand("evaluate", "score system alignments against gold");
  evaluate->add_option("--sys", sys)->required();
  evaluate->add_option("--gold", gold)->required();
  evaluate->add_option("--level", level);

  auto* confusion = app.add_subcommand("confusion", "confusion matrix against gold");
  confusion->add_option("--sys", sys)->required();
  confusion->add_option("--gold", gold)->required();
  confusion->add_option("--axis", axis)->required();

  auto* verbalize = app.add_subcommand("verbalize", "explain annotated pairs in English");
  verbalize->add_option("--in", in)->required();
  verbalize->add_flag("--include-equi", include_equi);
  verbalize->add_option("--config", config_path);
  verbalize->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*stats) return cmd_stats(stat_files);
    if (*pipeline) return cmd_pipeline(in, preset, config_path, out);
    if (*train) return cmd_train(train_files, mode, config_path, seed, out);
    if (*evaluate) return cmd_evaluate(sys, gold, level);
    if (*confusion) return cmd_confusion(sys, gold, axis);
    if (*verbalize) return cmd_verbalize(in, include_equi, config_path, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ists::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ists::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const ists::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
