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

#include "ists/verbalize.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ists/text.hpp"

namespace ists {

VerbalizationConfig VerbalizationConfig::defaults() {
  VerbalizationConfig c;
  c.templates = {
      {CoreLabel::kEqui, "{X} and {Y} mean the same"},
      {CoreLabel::kSpe1, "{X} is {QUAL} specific than {Y}"},
      {CoreLabel::kSpe2, "{X} is {QUAL} general than {Y}"},
      {CoreLabel::kSimi, "{X} and {Y} are {QUAL} similar"},
      {CoreLabel::kRel, "{X} and {Y} don't mean the same but are {QUAL} related"},
      {CoreLabel::kOppo, "{X} and {Y} mean the opposite"},
  };
  const Bands spe = {{4.0, "a bit more"}, {3.0, "more"}, {0.0, "much more"}};
  c.qualifiers = {
      {CoreLabel::kSpe1, spe},
      {CoreLabel::kSpe2, spe},
      {CoreLabel::kSimi, {{4.0, "very"}, {3.0, ""}, {2.0, "slightly"}, {0.0, "scarcely"}}},
      {CoreLabel::kRel, {{4.0, "closely"}, {3.0, ""}, {2.0, "somehow"}, {0.0, "distantly"}}},
  };
  c.openers = {
      {4.5, "The two sentences mean the same."},
      {3.5, "The two sentences are very similar."},
      {2.5, "The two sentences are somewhat similar."},
      {1.5, "The two sentences share some details."},
      {0.0, "The two sentences are quite different."},
  };
  return c;
}

Bands parse_bands(const std::string& text) {
  Bands out;
  for (const std::string& part : split_on(text, "|")) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw ValidationError("band without ':' in '" + text + "'");
    const std::string_view bound = trim(std::string_view(part).substr(0, colon));
    double value = 0.0;
    auto [end, ec] = std::from_chars(bound.data(), bound.data() + bound.size(), value);
    if (ec != std::errc() || end != bound.data() + bound.size()) {
      throw ValidationError("bad band bound in '" + text + "'");
    }
    out.emplace_back(value, std::string(trim(std::string_view(part).substr(colon + 1))));
  }
  return out;
}

namespace {

void check_bands(const Bands& bands, const std::string& what) {
  if (bands.empty()) throw ValidationError(what + ": no bands");
  for (std::size_t k = 1; k < bands.size(); ++k) {
    if (!(bands[k].first < bands[k - 1].first)) {
      throw ValidationError(what + ": band bounds must strictly decrease");
    }
  }
  if (bands.back().first != 0.0) throw ValidationError(what + ": last band must start at 0");
}

bool parse_bool(const std::string& value) {
  const std::string v = to_lower(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ValidationError("not a boolean: " + value);
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (std::size_t at = text.find(from); at != std::string::npos;
       at = text.find(from, at + to.size())) {
    text.replace(at, from.size(), to);
  }
  return text;
}

std::string squeeze_spaces(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    out += c;
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

void VerbalizationConfig::check() const {
  for (CoreLabel l : kRelationLabels) {
    if (!templates.count(l)) {
      throw ValidationError("no template for " + std::string(label_name(l)));
    }
  }
  for (const auto& [label, bands] : qualifiers) check_bands(bands, std::string(label_name(label)));
  check_bands(openers, "opener");
}

VerbalizationConfig VerbalizationConfig::load(const std::string& path) {
  VerbalizationConfig c = defaults();
  for (const auto& [key, value] : read_key_values(path)) {
    if (key == "include_equi") {
      c.include_equi = parse_bool(value);
    } else if (key == "label_order") {
      c.label_order.clear();
      for (const std::string& name : split_on(value, ",")) {
        auto label = parse_core_label(trim(name));
        if (!label || !is_relation_label(*label)) {
          throw ValidationError(path + ": bad label in label_order: " + name);
        }
        c.label_order.push_back(*label);
      }
    } else if (key == "opener.bands") {
      c.openers = parse_bands(value);
    } else if (key == "context_suffix") {
      c.context_suffix = value;
    } else if (key.size() > 6 && key.substr(key.size() - 6) == ".bands") {
      auto label = parse_core_label(key.substr(0, key.size() - 6));
      if (!label || !is_relation_label(*label)) throw ValidationError(path + ": bad key " + key);
      c.qualifiers[*label] = parse_bands(value);
    } else if (auto label = parse_core_label(key); label && is_relation_label(*label)) {
      c.templates[*label] = value;
    } else {
      throw ValidationError(path + ": unknown key " + key);
    }
  }
  c.check();
  return c;
}

const std::string& band_for(const Bands& bands, double score) {
  for (const auto& band : bands) {
    if (score >= band.first) return band.second;
  }
  return bands.back().second;
}

double overall_score(const InterpretablePair& pair) {
  double weighted = 0.0;
  double tokens = 0.0;
  for (const ChunkAlignment& a : pair.alignments) {
    const double n = (a.left_null() ? 0.0 : a.left.size()) + (a.right_null() ? 0.0 : a.right.size());
    tokens += n;
    if (a.aligned() && a.score) weighted += n * *a.score;
  }
  return tokens > 0.0 ? weighted / tokens : 0.0;
}

std::string verbalize_alignment(const InterpretablePair& pair, const ChunkAlignment& record,
                                const VerbalizationConfig& config) {
  if (!record.aligned() || !is_relation_label(record.label.core)) {
    throw std::invalid_argument("only aligned records with a relation label are verbalized");
  }
  auto tmpl = config.templates.find(record.label.core);
  if (tmpl == config.templates.end()) {
    throw std::invalid_argument("no template for " + std::string(label_name(record.label.core)));
  }
  std::string qualifier;
  if (auto q = config.qualifiers.find(record.label.core); q != config.qualifiers.end()) {
    qualifier = band_for(q->second, record.score.value_or(0.0));
  }
  std::string text = tmpl->second;
  text = replace_all(text, "{QUAL}", qualifier);
  text = replace_all(text, "{X}", "'" + pair.sent1.text_of(record.left) + "'");
  text = replace_all(text, "{Y}", "'" + pair.sent2.text_of(record.right) + "'");
  text = squeeze_spaces(text);
  if (!config.context_suffix.empty()) text += " " + config.context_suffix;
  if (record.label.fact) text += "; note a difference in factuality";
  if (record.label.pol) text += "; note a difference in polarity";
  return text;
}

std::string verbalize_pair(const InterpretablePair& pair, const VerbalizationConfig& config) {
  std::string out = band_for(config.openers, overall_score(pair));

  auto rank = [&](CoreLabel l) {
    auto it = std::find(config.label_order.begin(), config.label_order.end(), l);
    return static_cast<int>(it - config.label_order.begin());
  };
  std::vector<const ChunkAlignment*> chosen;
  for (const ChunkAlignment& a : pair.alignments) {
    if (!a.aligned() || !is_relation_label(a.label.core)) continue;
    if (a.label.core == CoreLabel::kEqui && !config.include_equi) continue;
    chosen.push_back(&a);
  }
  std::stable_sort(chosen.begin(), chosen.end(), [&](const auto* x, const auto* y) {
    const int rx = rank(x->label.core), ry = rank(y->label.core);
    if (rx != ry) return rx < ry;
    return x->left.front() < y->left.front();
  });
  bool first = true;
  for (const ChunkAlignment* a : chosen) {
    out += first ? "\nNote that " : "\nNote also that ";
    out += verbalize_alignment(pair, *a, config);
    out += '.';
    first = false;
  }
  return out;
}

}  // namespace ists
