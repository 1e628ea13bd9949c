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

#include "ists/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ists {

TokenPairMap expand_token_pairs(const InterpretablePair& pair) {
  TokenPairMap out;
  for (const ChunkAlignment& a : pair.alignments) {
    if (!a.aligned()) continue;
    const double w = 1.0 / (static_cast<double>(a.left.size()) * a.right.size());
    for (int i : a.left) {
      for (int j : a.right) {
        auto [it, fresh] = out.try_emplace({i, j}, TokenPairInfo{0.0, a.label.core, a.score});
        it->second.weight += w;
      }
    }
  }
  return out;
}

std::string_view level_name(EvalLevel level) {
  switch (level) {
    case EvalLevel::kAli:
      return "ALI";
    case EvalLevel::kType:
      return "TYPE";
    case EvalLevel::kScore:
      return "SCORE";
    case EvalLevel::kTs:
      return "TS";
  }
  return "?";
}

std::optional<EvalLevel> parse_level(std::string_view name) {
  const std::string lower = to_lower(name);
  for (EvalLevel l : kEvalLevels) {
    if (to_lower(level_name(l)) == lower) return l;
  }
  if (lower == "t+s") return EvalLevel::kTs;
  return std::nullopt;
}

double f1_score(double precision, double recall) {
  if (!(precision > 0.0) || !(recall > 0.0)) return 0.0;
  return 2.0 / (1.0 / precision + 1.0 / recall);
}

namespace {

double score_factor(const AlignmentScore& a, const AlignmentScore& b) {
  if (!a || !b) return 0.0;
  return std::max(0.0, 1.0 - std::abs(*a - *b) / kMaxScore);
}

bool same_tokens(const ChunkedSentence& a, const ChunkedSentence& b) {
  if (a.tokens.size() != b.tokens.size()) return false;
  for (std::size_t k = 0; k < a.tokens.size(); ++k) {
    if (a.tokens[k].surface != b.tokens[k].surface) return false;
  }
  return true;
}

// Gold pairs in id order, each with its sys counterpart.
std::vector<std::pair<const InterpretablePair*, const InterpretablePair*>> match_pairs(
    const std::vector<InterpretablePair>& sys, const std::vector<InterpretablePair>& gold) {
  std::map<std::string, const InterpretablePair*> by_id;
  for (const InterpretablePair& p : sys) {
    if (!by_id.emplace(p.id, &p).second) {
      throw ValidationError("pair " + p.id + ": duplicate id in system file");
    }
  }
  std::map<std::string, const InterpretablePair*> gold_by_id;
  for (const InterpretablePair& p : gold) {
    if (!gold_by_id.emplace(p.id, &p).second) {
      throw ValidationError("pair " + p.id + ": duplicate id in gold file");
    }
  }
  std::vector<std::pair<const InterpretablePair*, const InterpretablePair*>> out;
  for (const auto& [id, g] : gold_by_id) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw ValidationError("pair " + id + ": missing from system file");
    if (!same_tokens(it->second->sent1, g->sent1) || !same_tokens(it->second->sent2, g->sent2)) {
      throw ValidationError("pair " + id + ": tokenization differs between system and gold");
    }
    out.emplace_back(it->second, g);
  }
  for (const auto& [id, s] : by_id) {
    if (!gold_by_id.count(id)) throw ValidationError("pair " + id + ": missing from gold file");
  }
  return out;
}

}  // namespace

EvalReport evaluate(const std::vector<InterpretablePair>& sys,
                    const std::vector<InterpretablePair>& gold) {
  EvalReport report;
  double total_sys = 0.0, total_gold = 0.0;
  std::array<double, 4> matched_sys{}, matched_gold{};

  for (const auto& [s, g] : match_pairs(sys, gold)) {
    for (const auto& a : s->alignments) report.sys_alignments += a.aligned();
    for (const auto& a : g->alignments) report.gold_alignments += a.aligned();
    const TokenPairMap sys_map = expand_token_pairs(*s);
    const TokenPairMap gold_map = expand_token_pairs(*g);
    for (const auto& [key, info] : sys_map) total_sys += info.weight;
    for (const auto& [key, info] : gold_map) total_gold += info.weight;
    for (const auto& [key, si] : sys_map) {
      auto it = gold_map.find(key);
      if (it == gold_map.end()) continue;
      const TokenPairInfo& gi = it->second;
      const double type = si.label == gi.label ? 1.0 : 0.0;
      const double score = score_factor(si.score, gi.score);
      const std::array<double, 4> m = {1.0, type, score, type * score};
      for (int l = 0; l < 4; ++l) {
        matched_sys[l] += si.weight * m[l];
        matched_gold[l] += gi.weight * m[l];
      }
    }
  }
  for (int l = 0; l < 4; ++l) {
    LevelScores& ls = report.levels[l];
    ls.precision = total_sys > 0.0 ? matched_sys[l] / total_sys : 0.0;
    ls.recall = total_gold > 0.0 ? matched_gold[l] / total_gold : 0.0;
    ls.f1 = f1_score(ls.precision, ls.recall);
  }
  return report;
}

LevelScores evaluate(const std::vector<InterpretablePair>& sys,
                     const std::vector<InterpretablePair>& gold, EvalLevel level) {
  return evaluate(sys, gold).at(level);
}

void print_report(std::ostream& out, const EvalReport& report,
                  const std::vector<EvalLevel>& levels) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << std::left << std::setw(8) << "level" << std::right << std::setw(10) << "P"
     << std::setw(10) << "R" << std::setw(10) << "F1" << '\n';
  for (EvalLevel l : levels) {
    const LevelScores& s = report.at(l);
    os << std::left << std::setw(8) << level_name(l) << std::right << std::setw(10)
       << s.precision << std::setw(10) << s.recall << std::setw(10) << s.f1 << '\n';
  }
  os << "sys_alignments=" << report.sys_alignments << '\n';
  os << "gold_alignments=" << report.gold_alignments << '\n';
  for (EvalLevel l : levels) {
    const LevelScores& s = report.at(l);
    os << level_name(l) << "_P=" << s.precision << '\n';
    os << level_name(l) << "_R=" << s.recall << '\n';
    os << level_name(l) << "_F1=" << s.f1 << '\n';
  }
  out << os.str();
}

// ---------------------------------------------------------------------------
// Confusion

int ConfusionMatrix::at(std::string_view gold, std::string_view sys) const {
  auto index = [&](std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown axis value " + std::string(name));
    return static_cast<Eigen::Index>(it - names.begin());
  };
  return counts(index(gold), index(sys));
}

namespace {

int axis_index(const ChunkAlignment& a, ConfusionAxis axis) {
  if (axis == ConfusionAxis::kLabel) return static_cast<int>(a.label.core);
  if (!a.score) return 6;
  return std::clamp(static_cast<int>(std::lround(*a.score)), 0, 5);
}

}  // namespace

ConfusionMatrix confusion_matrix(const std::vector<InterpretablePair>& sys,
                                 const std::vector<InterpretablePair>& gold, ConfusionAxis axis) {
  ConfusionMatrix cm;
  cm.axis = axis;
  if (axis == ConfusionAxis::kLabel) {
    for (CoreLabel l : kAllCoreLabels) cm.names.emplace_back(label_name(l));
  } else {
    cm.names = {"0", "1", "2", "3", "4", "5", "NIL"};
  }
  const auto n = static_cast<Eigen::Index>(cm.names.size());
  cm.counts = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [s, g] : match_pairs(sys, gold)) {
    for (const ChunkAlignment& ga : g->alignments) {
      for (const ChunkAlignment& sa : s->alignments) {
        if (sa.left == ga.left && sa.right == ga.right) {
          cm.counts(axis_index(ga, axis), axis_index(sa, axis)) += 1;
        }
      }
    }
  }
  return cm;
}

void print_confusion(std::ostream& out, const ConfusionMatrix& matrix) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "gold\\sys";
  for (const std::string& name : matrix.names) os << std::right << std::setw(7) << name;
  os << '\n';
  for (Eigen::Index r = 0; r < matrix.counts.rows(); ++r) {
    os << std::left << std::setw(10) << matrix.names[r];
    for (Eigen::Index c = 0; c < matrix.counts.cols(); ++c) {
      os << std::right << std::setw(7) << matrix.counts(r, c);
    }
    os << '\n';
  }
  out << os.str();
}

}  // namespace ists
