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

#include "ists/wa_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "ists/text.hpp"

namespace ists {

namespace {

const char kNotAligned[] = "-not aligned-";

enum class State {
  kOutside,
  kSentence1,
  kSentence2,
  kSourceOpen,
  kSource,
  kTranslationOpen,
  kTranslation,
  kAlignmentOpen,
  kAlignment,
  kClose,
};

class WaReader {
 public:
  WaReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  std::vector<InterpretablePair> read() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      line = std::string(rtrim(line));
      if (trim(line).empty()) continue;
      handle(std::string(trim(line)));
    }
    if (state_ != State::kOutside) fail("unexpected end of input inside sentence block");
    return std::move(pairs_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << source_ << ":" << line_no_ << ": ";
    if (!current_.id.empty()) msg << "pair " << current_.id << ": ";
    msg << what;
    throw WaParseError(msg.str());
  }

  void expect(const std::string& line, const char* tag, State next) {
    if (line != tag) fail(std::string("expected ") + tag + ", got '" + line + "'");
    state_ = next;
  }

  void handle(const std::string& line) {
    switch (state_) {
      case State::kOutside: open_sentence(line); break;
      case State::kSentence1:
        current_.sent1.raw = comment_text(line);
        state_ = State::kSentence2;
        break;
      case State::kSentence2:
        current_.sent2.raw = comment_text(line);
        state_ = State::kSourceOpen;
        break;
      case State::kSourceOpen: expect(line, "<source>", State::kSource); break;
      case State::kSource:
        if (line == "</source>") {
          state_ = State::kTranslationOpen;
        } else {
          add_token(current_.sent1, line);
        }
        break;
      case State::kTranslationOpen:
        expect(line, "<translation>", State::kTranslation);
        break;
      case State::kTranslation:
        if (line == "</translation>") {
          state_ = State::kAlignmentOpen;
        } else {
          add_token(current_.sent2, line);
        }
        break;
      case State::kAlignmentOpen: expect(line, "<alignment>", State::kAlignment); break;
      case State::kAlignment:
        if (line == "</alignment>") {
          state_ = State::kClose;
        } else {
          add_alignment(line);
        }
        break;
      case State::kClose:
        expect(line, "</sentence>", State::kOutside);
        finish_pair();
        break;
    }
  }

  void open_sentence(const std::string& line) {
    static const std::regex kOpen(R"(^<sentence\b(.*)>$)");
    static const std::regex kId(R"(\bid\s*=\s*"([^"]*)\")");
    static const std::regex kStatus(R"(\bstatus\s*=\s*"([^"]*)\")");
    std::smatch match;
    if (!std::regex_match(line, match, kOpen)) {
      fail("expected <sentence id=\"...\">, got '" + line + "'");
    }
    const std::string attrs = match[1];
    current_ = InterpretablePair{};
    std::smatch attr;
    if (!std::regex_search(attrs, attr, kId) || attr[1].length() == 0) {
      fail("sentence block without id");
    }
    current_.id = attr[1];
    if (std::regex_search(attrs, attr, kStatus)) current_.status = attr[1];
    if (!ids_.insert(current_.id).second) fail("duplicate pair id");
    state_ = State::kSentence1;
  }

  std::string comment_text(const std::string& line) const {
    if (line.rfind("//", 0) != 0) fail("expected '// sentence text', got '" + line + "'");
    return std::string(trim(std::string_view(line).substr(2)));
  }

  void add_token(ChunkedSentence& sentence, const std::string& line) {
    const std::vector<std::string> fields = split_ws(line);
    // INDEX SURFACE :
    if (fields.size() != 3 || fields[2] != ":") {
      fail("malformed token line '" + line + "'");
    }
    const int index = parse_index(fields[0]);
    if (index != static_cast<int>(sentence.tokens.size()) + 1) {
      fail("token index " + fields[0] + " out of sequence");
    }
    Token token;
    token.index = index;
    token.surface = fields[1];
    sentence.tokens.push_back(std::move(token));
  }

  int parse_index(const std::string& text) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
      fail("invalid token index '" + text + "'");
    }
    return value;
  }

  std::vector<int> parse_side(const std::string& text, const ChunkedSentence& sentence,
                              const char* side) const {
    std::vector<int> indices;
    for (const std::string& field : split_ws(text)) indices.push_back(parse_index(field));
    if (indices.empty()) fail(std::string("empty ") + side + " token list");
    if (indices.size() == 1 && indices[0] == kNullToken) return indices;
    for (int index : indices) {
      if (index == kNullToken) fail(std::string("null token mixed into ") + side + " side");
      if (index > static_cast<int>(sentence.tokens.size())) {
        fail(std::string(side) + " token index " + std::to_string(index) + " out of range");
      }
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
      fail(std::string("repeated token in ") + side + " side");
    }
    return indices;
  }

  void add_alignment(const std::string& line) {
    std::vector<std::string> fields = split_on(line, "//");
    if (fields.size() < 3) fail("malformed alignment line '" + line + "'");
    const std::vector<std::string> sides = split_on(fields[0], "<==>");
    if (sides.size() != 2) fail("alignment without '<==>' separator");

    ChunkAlignment record;
    record.left = parse_side(sides[0], current_.sent1, "left");
    record.right = parse_side(sides[1], current_.sent2, "right");
    if (record.left_null() && record.right_null()) fail("both alignment sides are null");

    const std::string label_text(trim(fields[1]));
    auto label = AlignmentLabel::parse(label_text);
    if (!label) fail("unknown label '" + label_text + "'");
    record.label = *label;

    const std::string score_text(trim(fields[2]));
    if (to_lower(score_text) == "nil") {
      record.score = std::nullopt;
    } else {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(score_text.data(),
                                       score_text.data() + score_text.size(), value);
      if (ec != std::errc() || ptr != score_text.data() + score_text.size() ||
          !std::isfinite(value)) {
        fail("invalid score '" + score_text + "'");
      }
      record.score = value;
    }
    current_.alignments.push_back(std::move(record));
  }

  void collect_chunks(ChunkedSentence& sentence, bool left) {
    std::vector<int> owner(sentence.tokens.size() + 1, -1);
    for (std::size_t r = 0; r < current_.alignments.size(); ++r) {
      const ChunkAlignment& a = current_.alignments[r];
      const std::vector<int>& side = left ? a.left : a.right;
      if (left ? a.left_null() : a.right_null()) continue;
      for (int index : side) {
        if (owner[index] >= 0) {
          fail("duplicate chunk participation: " + std::string(left ? "source" : "target") +
               " token " + std::to_string(index) + " in records " +
               std::to_string(owner[index] + 1) + " and " + std::to_string(r + 1));
        }
        owner[index] = static_cast<int>(r);
      }
      Chunk chunk;
      chunk.tokens = side;
      chunk.text = sentence.text_of(side);
      sentence.chunks.push_back(std::move(chunk));
    }
    std::sort(sentence.chunks.begin(), sentence.chunks.end(),
              [](const Chunk& a, const Chunk& b) { return a.first() < b.first(); });
  }

  void finish_pair() {
    collect_chunks(current_.sent1, true);
    collect_chunks(current_.sent2, false);
    pairs_.push_back(std::move(current_));
    current_ = InterpretablePair{};
  }

  std::istream& in_;
  std::string source_;
  long line_no_ = 0;
  State state_ = State::kOutside;
  InterpretablePair current_;
  std::set<std::string> ids_;
  std::vector<InterpretablePair> pairs_;
};

std::string join_indices(const std::vector<int>& indices) {
  std::string out;
  for (int index : indices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(index);
  }
  return out;
}

void write_tokens(std::ostream& out, const ChunkedSentence& sentence) {
  for (const Token& token : sentence.tokens) {
    out << token.index << ' ' << token.surface << " :\n";
  }
}

}  // namespace

std::vector<InterpretablePair> parse_wa(std::istream& in, const std::string& source) {
  return WaReader(in, source).read();
}

std::vector<InterpretablePair> read_wa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_wa(in, path);
}

std::string format_score(const AlignmentScore& score) {
  if (!score) return "NIL";
  const double value = *score;
  if (value == std::floor(value) && std::abs(value) < 1e9) {
    return std::to_string(static_cast<long>(value));
  }
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void write_wa(std::ostream& out, const std::vector<InterpretablePair>& pairs, bool force) {
  for (const InterpretablePair& pair : pairs) {
    if (!force) {
      const auto violations = validate_pair(pair);
      if (has_errors(violations)) {
        for (const auto& v : violations) {
          if (v.severity == Violation::Severity::kError) {
            throw ValidationError("pair " + pair.id + ": " + v.message);
          }
        }
      }
    }
    out << "<sentence id=\"" << pair.id << "\" status=\"" << pair.status << "\">\n";
    out << "// " << pair.sent1.raw << "\n";
    out << "// " << pair.sent2.raw << "\n";
    out << "<source>\n";
    write_tokens(out, pair.sent1);
    out << "</source>\n<translation>\n";
    write_tokens(out, pair.sent2);
    out << "</translation>\n<alignment>\n";
    for (const ChunkAlignment& a : pair.alignments) {
      out << join_indices(a.left) << " <==> " << join_indices(a.right) << " // "
          << a.label.to_string() << " // " << format_score(a.score) << " // "
          << (a.left_null() ? kNotAligned : pair.sent1.text_of(a.left)) << " <==> "
          << (a.right_null() ? kNotAligned : pair.sent2.text_of(a.right)) << "\n";
    }
    out << "</alignment>\n</sentence>\n\n";
  }
}

std::string write_wa(const std::vector<InterpretablePair>& pairs, bool force) {
  std::ostringstream out;
  write_wa(out, pairs, force);
  return out.str();
}

void write_wa_file(const std::string& path, const std::vector<InterpretablePair>& pairs,
                   bool force) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_wa(out, pairs, force);
}

double DatasetStats::chunks_per_sentence() const {
  return sentences == 0 ? 0.0 : static_cast<double>(chunks) / sentences;
}

double DatasetStats::tokens_per_chunk() const {
  return chunks == 0 ? 0.0 : static_cast<double>(chunk_tokens) / chunks;
}

long DatasetStats::label_count(CoreLabel label) const {
  auto it = label_counts.find(label);
  return it == label_counts.end() ? 0 : it->second;
}

DatasetStats& DatasetStats::operator+=(const DatasetStats& other) {
  sentence_pairs += other.sentence_pairs;
  sentences += other.sentences;
  chunks += other.chunks;
  chunk_tokens += other.chunk_tokens;
  aligned_pairs += other.aligned_pairs;
  for (std::size_t b = 0; b < score_bins.size(); ++b) score_bins[b] += other.score_bins[b];
  for (const auto& [label, count] : other.label_counts) label_counts[label] += count;
  alic += other.alic;
  noali += other.noali;
  fact += other.fact;
  pol += other.pol;
  return *this;
}

DatasetStats dataset_stats(const std::vector<InterpretablePair>& pairs) {
  DatasetStats stats;
  for (CoreLabel label : kRelationLabels) stats.label_counts[label] = 0;
  for (const InterpretablePair& pair : pairs) {
    ++stats.sentence_pairs;
    stats.sentences += 2;
    for (const ChunkedSentence* s : {&pair.sent1, &pair.sent2}) {
      stats.chunks += static_cast<long>(s->chunks.size());
      for (const Chunk& chunk : s->chunks) stats.chunk_tokens += static_cast<long>(chunk.size());
    }
    for (const ChunkAlignment& a : pair.alignments) {
      if (a.label.fact) ++stats.fact;
      if (a.label.pol) ++stats.pol;
      switch (a.label.core) {
        case CoreLabel::kAlic: ++stats.alic; continue;
        case CoreLabel::kNoali: ++stats.noali; continue;
        default: break;
      }
      if (!a.aligned()) continue;
      ++stats.aligned_pairs;
      ++stats.label_counts[a.label.core];
      if (!a.score) continue;
      const double s = *a.score;
      std::size_t bin = 5;
      if (s >= 5.0) bin = 0;
      else if (s >= 4.0) bin = 1;
      else if (s >= 3.0) bin = 2;
      else if (s >= 2.0) bin = 3;
      else if (s >= 1.0) bin = 4;
      ++stats.score_bins[bin];
    }
  }
  return stats;
}

void print_stats(std::ostream& out, const DatasetStats& stats) {
  auto row = [&](const std::string& name, const std::string& value) {
    out << std::left << std::setw(22) << name << std::right << std::setw(10) << value << "\n";
  };
  std::ostringstream cps, tpc;
  cps << std::fixed << std::setprecision(2) << stats.chunks_per_sentence();
  tpc << std::fixed << std::setprecision(2) << stats.tokens_per_chunk();

  row("Sentence pairs", std::to_string(stats.sentence_pairs));
  row("Chunks/sentence", cps.str());
  row("Tokens/chunk", tpc.str());
  row("Aligned pairs", std::to_string(stats.aligned_pairs));
  for (std::size_t b = 0; b < stats.score_bins.size(); ++b) {
    row(std::string("  Score in ") + DatasetStats::kBinNames[b],
        std::to_string(stats.score_bins[b]));
  }
  for (CoreLabel label : {CoreLabel::kEqui, CoreLabel::kSpe1, CoreLabel::kSpe2,
                          CoreLabel::kSimi, CoreLabel::kRel, CoreLabel::kOppo}) {
    row("  " + std::string(label_name(label)), std::to_string(stats.label_count(label)));
  }
  row("ALIC", std::to_string(stats.alic));
  row("NOALI", std::to_string(stats.noali));
  row("FACT", std::to_string(stats.fact));
  row("POL", std::to_string(stats.pol));

  out << "pairs=" << stats.sentence_pairs << "\n"
      << "chunks_per_sentence=" << cps.str() << "\n"
      << "tokens_per_chunk=" << tpc.str() << "\n"
      << "aligned=" << stats.aligned_pairs << "\n";
  for (CoreLabel label : kRelationLabels) {
    out << label_name(label) << "=" << stats.label_count(label) << "\n";
  }
  out << "ALIC=" << stats.alic << "\nNOALI=" << stats.noali << "\nFACT=" << stats.fact
      << "\nPOL=" << stats.pol << "\n";
}

}  // namespace ists
