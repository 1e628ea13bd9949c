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

#include "ists/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ists {

std::string_view label_name(CoreLabel label) {
  switch (label) {
    case CoreLabel::kEqui: return "EQUI";
    case CoreLabel::kOppo: return "OPPO";
    case CoreLabel::kSpe1: return "SPE1";
    case CoreLabel::kSpe2: return "SPE2";
    case CoreLabel::kSimi: return "SIMI";
    case CoreLabel::kRel: return "REL";
    case CoreLabel::kAlic: return "ALIC";
    case CoreLabel::kNoali: return "NOALI";
  }
  return "?";
}

std::optional<CoreLabel> parse_core_label(std::string_view name) {
  for (CoreLabel label : kAllCoreLabels) {
    if (label_name(label) == name) return label;
  }
  return std::nullopt;
}

bool is_relation_label(CoreLabel label) {
  return label != CoreLabel::kAlic && label != CoreLabel::kNoali;
}

std::string AlignmentLabel::to_string() const {
  std::string out(label_name(core));
  if (fact) out += "_FACT";
  if (pol) out += "_POL";
  return out;
}

std::optional<AlignmentLabel> AlignmentLabel::parse(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  AlignmentLabel label;
  std::optional<CoreLabel> core;
  std::size_t start = 0;
  while (start <= upper.size()) {
    std::size_t end = upper.find('_', start);
    if (end == std::string::npos) end = upper.size();
    std::string_view part(upper.data() + start, end - start);
    if (part == "FACT") {
      if (label.fact) return std::nullopt;
      label.fact = true;
    } else if (part == "POL") {
      if (label.pol) return std::nullopt;
      label.pol = true;
    } else if (auto parsed = parse_core_label(part); parsed && !core) {
      core = parsed;
    } else {
      return std::nullopt;
    }
    start = end + 1;
  }
  if (!core) return std::nullopt;
  label.core = *core;
  return label;
}

std::string Token::lemma_or_lower() const {
  if (lemma && !lemma->empty()) return to_lower(*lemma);
  return to_lower(surface);
}

std::string ChunkedSentence::text_of(const std::vector<int>& indices) const {
  std::string out;
  for (int index : indices) {
    if (!out.empty()) out += ' ';
    out += token(index).surface;
  }
  return out;
}

int ChunkedSentence::chunk_of(int index) const {
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const auto& toks = chunks[c].tokens;
    if (std::binary_search(toks.begin(), toks.end(), index)) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

ChunkedSentence make_sentence(std::string_view text) {
  ChunkedSentence sentence;
  sentence.raw = std::string(text);
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    Token token;
    token.index = static_cast<int>(sentence.tokens.size()) + 1;
    token.surface = word;
    sentence.tokens.push_back(std::move(token));
  }
  return sentence;
}

bool same_annotation(const InterpretablePair& a, const InterpretablePair& b) {
  auto same_sentence = [](const ChunkedSentence& x, const ChunkedSentence& y) {
    if (x.raw != y.raw || x.tokens.size() != y.tokens.size() ||
        x.chunks.size() != y.chunks.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.tokens.size(); ++i) {
      if (x.tokens[i].index != y.tokens[i].index ||
          x.tokens[i].surface != y.tokens[i].surface) {
        return false;
      }
    }
    for (std::size_t c = 0; c < x.chunks.size(); ++c) {
      if (x.chunks[c].tokens != y.chunks[c].tokens) return false;
    }
    return true;
  };
  return a.id == b.id && a.status == b.status &&
         same_sentence(a.sent1, b.sent1) && same_sentence(a.sent2, b.sent2) &&
         a.alignments == b.alignments;
}

namespace {

std::string describe(std::size_t record, const ChunkAlignment& alignment) {
  std::ostringstream out;
  out << "record " << record + 1 << " (" << alignment.label.to_string() << ")";
  return out.str();
}

// Counts how many records mention each chunk of `sentence`; reports token
// sets that do not coincide with a chunk.
void check_side(const ChunkedSentence& sentence, const std::vector<int>& side,
                const std::string& where, const char* side_name,
                std::vector<int>& chunk_uses, std::vector<Violation>& out) {
  for (int index : side) {
    if (index < 1 || index > static_cast<int>(sentence.tokens.size())) {
      out.push_back({Violation::Severity::kError,
                     where + ": " + side_name + " token index " +
                         std::to_string(index) + " out of range"});
      return;
    }
  }
  const int owner = sentence.chunk_of(side.front());
  if (owner < 0 || sentence.chunks[owner].tokens != side) {
    out.push_back({Violation::Severity::kError,
                   where + ": " + side_name +
                       " token set does not match a whole chunk"});
    return;
  }
  ++chunk_uses[owner];
}

}  // namespace

std::vector<Violation> validate_pair(const InterpretablePair& pair) {
  using Severity = Violation::Severity;
  std::vector<Violation> out;
  std::vector<int> uses1(pair.sent1.chunks.size(), 0);
  std::vector<int> uses2(pair.sent2.chunks.size(), 0);

  for (std::size_t r = 0; r < pair.alignments.size(); ++r) {
    const ChunkAlignment& a = pair.alignments[r];
    const std::string where = describe(r, a);
    const CoreLabel core = a.label.core;
    const std::string name(label_name(core));

    if (a.left.empty() || a.right.empty()) {
      out.push_back({Severity::kError, where + ": empty token set"});
      continue;
    }
    if (a.left_null() && a.right_null()) {
      out.push_back({Severity::kError, where + ": both sides are null"});
      continue;
    }
    if (!a.aligned() && is_relation_label(core)) {
      out.push_back({Severity::kError,
                     where + ": null side is only allowed for NOALI/ALIC"});
    }
    if (!a.left_null()) check_side(pair.sent1, a.left, where, "left", uses1, out);
    if (!a.right_null()) check_side(pair.sent2, a.right, where, "right", uses2, out);

    if (!is_relation_label(core)) {
      if (a.score && *a.score != 0.0) {
        out.push_back({Severity::kError, where + ": " + name + " must have NIL score"});
      }
      if (a.label.fact || a.label.pol) {
        out.push_back({Severity::kInfo,
                       where + ": unaligned chunk carries FACT/POL"});
      }
    } else if (!a.score) {
      out.push_back({Severity::kError, where + ": " + name + " must have a score"});
    } else if (core == CoreLabel::kEqui) {
      if (*a.score != kMaxScore) {
        out.push_back({Severity::kError, where + ": EQUI must have score 5"});
      }
    } else if (*a.score >= kMaxScore) {
      out.push_back({Severity::kError, where + ": non-EQUI score must be < 5"});
    } else if (*a.score <= 0.0) {
      out.push_back({Severity::kError, where + ": non-EQUI score must be > 0"});
    }
  }

  auto report_uses = [&](const ChunkedSentence& sentence,
                         const std::vector<int>& uses, const char* name) {
    for (std::size_t c = 0; c < uses.size(); ++c) {
      if (uses[c] == 1) continue;
      out.push_back({Severity::kError,
                     std::string(name) + " chunk '" + sentence.chunks[c].text +
                         "' appears in " + std::to_string(uses[c]) +
                         " records (expected 1)"});
    }
  };
  report_uses(pair.sent1, uses1, "sentence 1");
  report_uses(pair.sent2, uses2, "sentence 2");
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.severity == Violation::Severity::kError;
  });
}

std::string_view entailment_symbol(EntailmentRelation relation) {
  switch (relation) {
    case EntailmentRelation::kEquivalence: return "≡";
    case EntailmentRelation::kNegation: return "¬";
    case EntailmentRelation::kForwardEntailment: return "⊏";
    case EntailmentRelation::kReverseEntailment: return "⊐";
    case EntailmentRelation::kRelated: return "~";
    case EntailmentRelation::kIndependent: return "#";
  }
  return "?";
}

EntailmentRelation label_to_entailment(const AlignmentLabel& label) {
  switch (label.core) {
    case CoreLabel::kEqui: return EntailmentRelation::kEquivalence;
    case CoreLabel::kOppo: return EntailmentRelation::kNegation;
    case CoreLabel::kSpe1: return EntailmentRelation::kForwardEntailment;
    case CoreLabel::kSpe2: return EntailmentRelation::kReverseEntailment;
    case CoreLabel::kSimi:
    case CoreLabel::kRel: return EntailmentRelation::kRelated;
    case CoreLabel::kAlic:
    case CoreLabel::kNoali: break;
  }
  throw std::invalid_argument("no entailment relation for " + label.to_string());
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace ists
