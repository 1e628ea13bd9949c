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

// Domain model for interpretable STS: tokens, chunks, typed and scored
// chunk alignments, and the constraints that tie labels to scores.

#ifndef ISTS_CORE_HPP_
#define ISTS_CORE_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ists {

// Base of every error the library throws. The CLI maps subclasses onto
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class CoreLabel { kEqui, kOppo, kSpe1, kSpe2, kSimi, kRel, kAlic, kNoali };

inline constexpr std::array<CoreLabel, 8> kAllCoreLabels = {
    CoreLabel::kEqui, CoreLabel::kOppo, CoreLabel::kSpe1, CoreLabel::kSpe2,
    CoreLabel::kSimi, CoreLabel::kRel,  CoreLabel::kAlic, CoreLabel::kNoali};

// The six labels an aligned chunk pair can carry.
inline constexpr std::array<CoreLabel, 6> kRelationLabels = {
    CoreLabel::kEqui, CoreLabel::kOppo, CoreLabel::kSpe1,
    CoreLabel::kSpe2, CoreLabel::kSimi, CoreLabel::kRel};

std::string_view label_name(CoreLabel label);
std::optional<CoreLabel> parse_core_label(std::string_view name);
bool is_relation_label(CoreLabel label);

struct AlignmentLabel {
  CoreLabel core = CoreLabel::kNoali;
  bool fact = false;
  bool pol = false;

  // "SPE1", "EQUI_POL", "NOALI_FACT_POL", ...
  std::string to_string() const;
  static std::optional<AlignmentLabel> parse(std::string_view text);

  friend bool operator==(const AlignmentLabel&, const AlignmentLabel&) = default;
};

// nullopt is NIL.
using AlignmentScore = std::optional<double>;

inline constexpr double kMaxScore = 5.0;

struct Token {
  int index = 0;  // 1-based
  std::string surface;
  std::optional<std::string> lemma;
  std::optional<std::string> pos;

  // Lemma when known, lowercased surface otherwise.
  std::string lemma_or_lower() const;
};

struct Chunk {
  std::vector<int> tokens;  // strictly increasing token indices
  std::string text;
  // Phrase type from a chunker ("NP", "PP", ...); empty for gold chunks.
  std::string phrase;

  int first() const { return tokens.front(); }
  int last() const { return tokens.back(); }
  std::size_t size() const { return tokens.size(); }
};

struct ChunkedSentence {
  std::string raw;
  std::vector<Token> tokens;  // tokens[k].index == k + 1
  std::vector<Chunk> chunks;  // non-overlapping, in token order

  const Token& token(int index) const { return tokens.at(index - 1); }
  // Chunk text rebuilt from token surfaces.
  std::string text_of(const std::vector<int>& indices) const;
  // Index of the chunk owning token `index`, or -1.
  int chunk_of(int index) const;
};

// Builds a sentence from whitespace-separated surfaces; no chunks.
ChunkedSentence make_sentence(std::string_view text);

inline constexpr int kNullToken = 0;

struct ChunkAlignment {
  // {0} marks the null side of an unaligned chunk.
  std::vector<int> left;
  std::vector<int> right;
  AlignmentLabel label;
  AlignmentScore score;

  bool left_null() const { return left.size() == 1 && left[0] == kNullToken; }
  bool right_null() const { return right.size() == 1 && right[0] == kNullToken; }
  bool aligned() const { return !left_null() && !right_null(); }

  friend bool operator==(const ChunkAlignment&, const ChunkAlignment&) = default;
};

struct InterpretablePair {
  std::string id;
  std::string status;
  ChunkedSentence sent1;
  ChunkedSentence sent2;
  std::vector<ChunkAlignment> alignments;
};

// Structural equality as far as the .wa format can carry it: ids, raw
// text, token surfaces, chunk token sets and alignment records.
bool same_annotation(const InterpretablePair& a, const InterpretablePair& b);

struct Violation {
  enum class Severity { kError, kInfo };
  Severity severity = Severity::kError;
  std::string message;
};

std::vector<Violation> validate_pair(const InterpretablePair& pair);
bool has_errors(const std::vector<Violation>& violations);

enum class EntailmentRelation {
  kEquivalence,         // ≡
  kNegation,            // ¬
  kForwardEntailment,   // ⊏
  kReverseEntailment,   // ⊐
  kRelated,             // ~
  kIndependent,         // #
};

std::string_view entailment_symbol(EntailmentRelation relation);

// Throws std::invalid_argument for ALIC and NOALI.
EntailmentRelation label_to_entailment(const AlignmentLabel& label);

std::string to_lower(std::string_view text);

}  // namespace ists

#endif  // ISTS_CORE_HPP_
