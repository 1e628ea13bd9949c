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

#ifndef ISTS_EVAL_HPP_
#define ISTS_EVAL_HPP_

#include <Eigen/Core>

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ists/core.hpp"

namespace ists {

struct TokenPairInfo {
  double weight = 0.0;
  CoreLabel label = CoreLabel::kEqui;
  AlignmentScore score;
};

using TokenPairMap = std::map<std::pair<int, int>, TokenPairInfo>;

// Every aligned record over A x B yields |A||B| pairs of weight 1/(|A||B|).
// Null-side records are skipped.
TokenPairMap expand_token_pairs(const InterpretablePair& pair);

enum class EvalLevel { kAli, kType, kScore, kTs };
inline constexpr std::array<EvalLevel, 4> kEvalLevels = {EvalLevel::kAli, EvalLevel::kType,
                                                         EvalLevel::kScore, EvalLevel::kTs};

std::string_view level_name(EvalLevel level);
std::optional<EvalLevel> parse_level(std::string_view name);

struct LevelScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::array<LevelScores, 4> levels{};
  long sys_alignments = 0;
  long gold_alignments = 0;

  const LevelScores& at(EvalLevel level) const { return levels[static_cast<int>(level)]; }
};

// Harmonic mean, computed as 2 / (1/P + 1/R) so it is monotone and
// symmetric in floating point; 0 when either is 0.
double f1_score(double precision, double recall);

// Pools all pairs. Throws ValidationError on pair-id or tokenization
// mismatches.
EvalReport evaluate(const std::vector<InterpretablePair>& sys,
                    const std::vector<InterpretablePair>& gold);
LevelScores evaluate(const std::vector<InterpretablePair>& sys,
                     const std::vector<InterpretablePair>& gold, EvalLevel level);

// Prints the plain table, then ALI_P=..., ALI_R=..., ALI_F1=... lines.
void print_report(std::ostream& out, const EvalReport& report,
                  const std::vector<EvalLevel>& levels = {kEvalLevels.begin(),
                                                          kEvalLevels.end()});

enum class ConfusionAxis { kLabel, kScore };

struct ConfusionMatrix {
  ConfusionAxis axis = ConfusionAxis::kLabel;
  std::vector<std::string> names;  // row and column names
  Eigen::MatrixXi counts;          // rows gold, cols sys

  int at(std::string_view gold, std::string_view sys) const;
};

// Counts sys/gold record pairs with identical token sets on both sides.
// Score axis: scores rounded to the nearest integer 0..5, plus NIL.
ConfusionMatrix confusion_matrix(const std::vector<InterpretablePair>& sys,
                                 const std::vector<InterpretablePair>& gold, ConfusionAxis axis);

void print_confusion(std::ostream& out, const ConfusionMatrix& matrix);

}  // namespace ists

#endif  // ISTS_EVAL_HPP_
