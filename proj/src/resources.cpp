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

#include "ists/resources.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>

#include "ists/text.hpp"

namespace ists {

namespace {

[[noreturn]] void resource_fail(const std::string& source, long line, const std::string& what) {
  throw ResourceError(source + ":" + std::to_string(line) + ": " + what);
}

std::optional<double> to_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

bool is_integer(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(),
                                      [](unsigned char c) { return std::isdigit(c); });
}

std::ifstream open_resource(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open resource '" + path + "'");
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------
// EmbeddingSpace

EmbeddingSpace EmbeddingSpace::parse(std::istream& in, const std::string& source) {
  EmbeddingSpace space;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> fields = split_ws(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2 && is_integer(fields[0]) && is_integer(fields[1])) {
      continue;  // word2vec text header
    }
    if (fields.size() < 2) resource_fail(source, line_no, "embedding row without values");
    const int width = static_cast<int>(fields.size()) - 1;
    if (space.dimension_ == 0) space.dimension_ = width;
    if (width != space.dimension_) {
      resource_fail(source, line_no,
                    "dimension mismatch: expected " + std::to_string(space.dimension_) +
                        " values, got " + std::to_string(width));
    }
    Eigen::VectorXd vector(width);
    for (int k = 0; k < width; ++k) {
      auto value = to_double(fields[k + 1]);
      if (!value) resource_fail(source, line_no, "invalid number '" + fields[k + 1] + "'");
      vector[k] = *value;
    }
    if (!space.index_.count(fields[0])) space.add(fields[0], std::move(vector));
  }
  return space;
}

EmbeddingSpace EmbeddingSpace::load(const std::string& path) {
  auto in = open_resource(path);
  return parse(in, path);
}

void EmbeddingSpace::add(const std::string& word, Eigen::VectorXd vector) {
  if (dimension_ == 0) dimension_ = static_cast<int>(vector.size());
  if (vector.size() != dimension_) {
    throw ResourceError("embedding for '" + word + "' has dimension " +
                        std::to_string(vector.size()) + ", expected " +
                        std::to_string(dimension_));
  }
  auto [it, inserted] = index_.emplace(word, vectors_.size());
  if (inserted) {
    vectors_.push_back(std::move(vector));
  } else {
    vectors_[it->second] = std::move(vector);
  }
}

const Eigen::VectorXd* EmbeddingSpace::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) it = index_.find(to_lower(word));
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

std::optional<double> EmbeddingSpace::distance(std::string_view w, std::string_view v) const {
  const Eigen::VectorXd* a = find(w);
  const Eigen::VectorXd* b = find(v);
  if (!a || !b) return std::nullopt;
  return (*a - *b).norm();
}

std::optional<double> EmbeddingSpace::observe(std::string_view w, std::string_view v) {
  auto d = distance(w, v);
  if (d) max_distance_ = std::max(max_distance_, *d);
  return d;
}

std::optional<double> EmbeddingSpace::similarity(std::string_view w, std::string_view v) const {
  auto d = distance(w, v);
  if (!d) return std::nullopt;
  const double max_d = std::max(max_distance_, *d);
  if (max_d == 0.0) return 1.0;
  return 1.0 - *d / max_d;
}

std::optional<double> embedding_similarity(EmbeddingSpace& space, std::string_view w,
                                           std::string_view v) {
  space.observe(w, v);
  return space.similarity(w, v);
}

// ---------------------------------------------------------------------------
// ParaphraseTable

ParaphraseTable ParaphraseTable::parse(std::istream& in, const std::string& source) {
  ParaphraseTable table;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_on(rtrim(line), "\t");
    if (fields.size() != 3) resource_fail(source, line_no, "expected w1<TAB>w2<TAB>prob");
    auto p = to_double(trim(fields[2]));
    if (!p || *p < 0.0 || *p > 1.0) {
      resource_fail(source, line_no, "probability outside [0,1]: '" + fields[2] + "'");
    }
    table.add(trim(fields[0]), trim(fields[1]), *p);
  }
  return table;
}

ParaphraseTable ParaphraseTable::load(const std::string& path) {
  auto in = open_resource(path);
  return parse(in, path);
}

void ParaphraseTable::add(std::string_view from, std::string_view to, double probability) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw ResourceError("paraphrase probability outside [0,1]");
  }
  entries_[{to_lower(from), to_lower(to)}] = probability;
}

std::optional<double> ParaphraseTable::probability(std::string_view from,
                                                   std::string_view to) const {
  auto it = entries_.find({to_lower(from), to_lower(to)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> paraphrase_similarity(const ParaphraseTable& table, std::string_view w,
                                            std::string_view v) {
  auto forward = table.probability(w, v);
  auto backward = table.probability(v, w);
  if (forward && backward) return (*forward + *backward) / 2.0;
  if (forward) return forward;
  return backward;
}

// ---------------------------------------------------------------------------
// IdfTable

IdfTable IdfTable::parse(std::istream& in, const std::string& source) {
  IdfTable table;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_on(rtrim(line), "\t");
    if (fields.size() != 2) resource_fail(source, line_no, "expected word<TAB>idf");
    auto value = to_double(trim(fields[1]));
    if (!value || *value < 0.0) resource_fail(source, line_no, "invalid idf '" + fields[1] + "'");
    if (trim(fields[0]) == "#default") {
      if (*value <= 0.0) resource_fail(source, line_no, "default idf must be positive");
      table.set_default(*value);
    } else {
      table.add(trim(fields[0]), *value);
    }
  }
  return table;
}

IdfTable IdfTable::load(const std::string& path) {
  auto in = open_resource(path);
  return parse(in, path);
}

void IdfTable::add(std::string_view word, double idf) {
  if (idf < 0.0) throw ResourceError("negative idf for '" + std::string(word) + "'");
  idf_[to_lower(word)] = idf;
  max_idf_ = std::max(max_idf_, idf);
}

void IdfTable::set_default(double idf) {
  if (!(idf > 0.0)) throw ResourceError("default idf must be positive");
  default_ = idf;
}

double IdfTable::default_idf() const {
  if (default_) return *default_;
  // Unseen words are rarer than anything in the table.
  return max_idf_ > 0.0 ? max_idf_ : 1.0;
}

double IdfTable::idf(std::string_view word) const {
  auto it = idf_.find(to_lower(word));
  return it == idf_.end() ? default_idf() : it->second;
}

// ---------------------------------------------------------------------------
// Taxonomy

Taxonomy Taxonomy::build(const std::vector<Entry>& entries) {
  Taxonomy tax;
  tax.synsets_.reserve(entries.size());
  for (const Entry& e : entries) {
    if (tax.by_id_.count(e.id)) throw ResourceError("duplicate synset id '" + e.id + "'");
    tax.by_id_[e.id] = static_cast<int>(tax.synsets_.size());
    Synset s;
    s.id = e.id;
    s.pos = e.pos;
    for (const std::string& lemma : e.lemmas) s.lemmas.push_back(to_lower(lemma));
    tax.synsets_.push_back(std::move(s));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (const std::string& hyper : entries[k].hypernyms) {
      auto it = tax.by_id_.find(hyper);
      if (it == tax.by_id_.end()) {
        throw ResourceError("synset '" + entries[k].id + "' has unknown hypernym '" + hyper +
                            "'");
      }
      auto& hypers = tax.synsets_[k].hypernyms;
      if (std::find(hypers.begin(), hypers.end(), it->second) == hypers.end()) {
        hypers.push_back(it->second);
        tax.synsets_[it->second].hyponyms.push_back(static_cast<int>(k));
      }
    }
  }
  for (std::size_t k = 0; k < tax.synsets_.size(); ++k) {
    for (const std::string& lemma : tax.synsets_[k].lemmas) {
      tax.by_lemma_[lemma].push_back(static_cast<int>(k));
    }
  }

  // Kahn order from the roots; anything left over sits on a cycle.
  const std::size_t n = tax.synsets_.size();
  std::vector<int> pending(n);
  std::deque<int> queue;
  for (std::size_t k = 0; k < n; ++k) {
    pending[k] = static_cast<int>(tax.synsets_[k].hypernyms.size());
    if (pending[k] == 0) queue.push_back(static_cast<int>(k));
  }
  std::vector<int> order;
  order.reserve(n);
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (int child : tax.synsets_[s].hyponyms) {
      if (--pending[child] == 0) queue.push_back(child);
    }
  }
  if (order.size() != n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (pending[k] > 0) {
        throw ResourceError("cyclic taxonomy: synset '" + tax.synsets_[k].id +
                            "' is its own ancestor");
      }
    }
  }

  // Depth is the shortest route to a root; the lch scale uses the longest.
  std::vector<int> longest(n, 1);
  for (int s : order) {
    Synset& syn = tax.synsets_[s];
    if (syn.hypernyms.empty()) {
      syn.depth = 1;
    } else {
      int best = std::numeric_limits<int>::max();
      for (int h : syn.hypernyms) {
        best = std::min(best, tax.synsets_[h].depth);
        longest[s] = std::max(longest[s], longest[h] + 1);
      }
      syn.depth = best + 1;
    }
    tax.max_depth_ = std::max(tax.max_depth_, longest[s]);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Synset& syn = tax.synsets_[*it];
    for (int child : syn.hyponyms) syn.height = std::max(syn.height, tax.synsets_[child].height + 1);
  }
  return tax;
}

Taxonomy Taxonomy::parse(std::istream& in, const std::string& source) {
  std::vector<Entry> entries;
  std::string line;
  long line_no = 0;
  auto list = [](const std::string& field) {
    std::vector<std::string> out;
    for (const std::string& item : split_on(field, ",")) {
      std::string_view t = trim(item);
      if (!t.empty()) out.emplace_back(t);
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_on(rtrim(line), "\t");
    if (fields.size() == 3) fields.emplace_back();
    if (fields.size() != 4) {
      resource_fail(source, line_no, "expected id<TAB>pos<TAB>lemmas<TAB>hypernyms");
    }
    Entry entry;
    entry.id = std::string(trim(fields[0]));
    entry.pos = std::string(trim(fields[1]));
    entry.lemmas = list(fields[2]);
    entry.hypernyms = list(fields[3]);
    if (entry.id.empty()) resource_fail(source, line_no, "empty synset id");
    entries.push_back(std::move(entry));
  }
  return build(entries);
}

Taxonomy Taxonomy::load(const std::string& path) {
  auto in = open_resource(path);
  return parse(in, path);
}

void Taxonomy::set_information_content(const std::string& id, double ic) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw ResourceError("information content for unknown synset '" + id + "'");
  if (!(ic >= 0.0)) throw ResourceError("negative information content for '" + id + "'");
  synsets_[it->second].ic = ic;
  has_ic_ = true;
}

void Taxonomy::load_information_content(std::istream& in, const std::string& source) {
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_on(rtrim(line), "\t");
    if (fields.size() != 2) resource_fail(source, line_no, "expected synsetId<TAB>ic");
    auto value = to_double(trim(fields[1]));
    if (!value) resource_fail(source, line_no, "invalid information content");
    if (*value < 0.0) resource_fail(source, line_no, "negative information content");
    try {
      set_information_content(std::string(trim(fields[0])), *value);
    } catch (const ResourceError& e) {
      resource_fail(source, line_no, e.what());
    }
  }
  has_ic_ = true;
}

const std::vector<int>& Taxonomy::senses(std::string_view lemma) const {
  static const std::vector<int> kNone;
  auto it = by_lemma_.find(to_lower(lemma));
  return it == by_lemma_.end() ? kNone : it->second;
}

std::optional<int> Taxonomy::find(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Taxonomy::lemma_depth(std::string_view lemma) const {
  std::optional<int> best;
  for (int s : senses(lemma)) {
    if (!best || synsets_[s].depth < *best) best = synsets_[s].depth;
  }
  return best;
}

std::map<int, int> Taxonomy::ancestors(int s) const {
  std::map<int, int> dist{{s, 0}};
  std::deque<int> queue{s};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int h : synsets_[cur].hypernyms) {
      if (dist.emplace(h, dist[cur] + 1).second) queue.push_back(h);
    }
  }
  return dist;
}

namespace {

struct SensePairGeometry {
  int shortest = 0;  // shortest a-b path through any common subsumer
  int lcs = -1;      // deepest common subsumer
  int via_lcs = 0;   // a-b path through the lcs
};

std::optional<SensePairGeometry> geometry(const Taxonomy& tax, int a, int b) {
  const auto up_a = tax.ancestors(a);
  const auto up_b = tax.ancestors(b);
  std::optional<SensePairGeometry> out;
  for (const auto& [node, da] : up_a) {
    auto it = up_b.find(node);
    if (it == up_b.end()) continue;
    const int e = da + it->second;
    if (!out) {
      out = SensePairGeometry{e, node, e};
      continue;
    }
    out->shortest = std::min(out->shortest, e);
    const Synset& cand = tax.synset(node);
    const Synset& best = tax.synset(out->lcs);
    if (cand.depth > best.depth || (cand.depth == best.depth && cand.ic > best.ic)) {
      out->lcs = node;
      out->via_lcs = e;
    }
  }
  return out;
}

}  // namespace

std::optional<double> taxonomy_similarity(const Taxonomy& taxonomy, std::string_view lemma_a,
                                          std::string_view lemma_b, TaxonomyMeasure measure,
                                          RootMode mode) {
  const auto& senses_a = taxonomy.senses(lemma_a);
  const auto& senses_b = taxonomy.senses(lemma_b);
  if (senses_a.empty() || senses_b.empty()) return std::nullopt;
  if (measure == TaxonomyMeasure::kJcn && !taxonomy.has_information_content()) {
    return std::nullopt;
  }
  std::optional<double> best;
  for (int a : senses_a) {
    for (int b : senses_b) {
      auto geo = geometry(taxonomy, a, b);
      if (!geo) continue;
      const bool lcs_root = mode == RootMode::kLcsAsRoot;
      const int e = lcs_root ? geo->via_lcs : geo->shortest;
      double value = 0.0;
      switch (measure) {
        case TaxonomyMeasure::kPath:
          value = 1.0 / (1.0 + e);
          break;
        case TaxonomyMeasure::kLch: {
          const int depth =
              lcs_root ? taxonomy.synset(geo->lcs).height + 1 : taxonomy.max_depth();
          value = -std::log((e + 1.0) / (2.0 * depth));
          break;
        }
        case TaxonomyMeasure::kJcn: {
          // Measured from the lcs the root offset cancels, so both modes agree.
          const double ic_a = taxonomy.synset(a).ic;
          const double ic_b = taxonomy.synset(b).ic;
          const double ic_lcs = taxonomy.synset(geo->lcs).ic;
          value = 1.0 / (std::max(0.0, ic_a + ic_b - 2.0 * ic_lcs) + kJcnEpsilon);
          break;
        }
      }
      if (!best || value > *best) best = value;
    }
  }
  return best;
}

bool is_more_specific(const Taxonomy& taxonomy, std::string_view lemma_a,
                      std::string_view lemma_b) {
  const auto& senses_b = taxonomy.senses(lemma_b);
  if (senses_b.empty()) return false;
  for (int a : taxonomy.senses(lemma_a)) {
    const auto up = taxonomy.ancestors(a);
    for (int b : senses_b) {
      auto it = up.find(b);
      if (it != up.end() && it->second > 0) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bundle

bool ResourcePaths::any() const {
  return !embeddings1.empty() || !embeddings2.empty() || !paraphrases.empty() ||
         !idf.empty() || !taxonomy.empty();
}

double LexicalResources::idf_of(std::string_view word) const {
  return idf ? idf->idf(word) : 1.0;
}

void LexicalResources::observe(std::string_view w, std::string_view v) {
  if (embeddings1) embeddings1->observe(w, v);
  if (embeddings2) embeddings2->observe(w, v);
}

LexicalResources load_resources(const ResourcePaths& paths) {
  LexicalResources bundle;
  if (!paths.embeddings1.empty()) bundle.embeddings1 = EmbeddingSpace::load(paths.embeddings1);
  if (!paths.embeddings2.empty()) bundle.embeddings2 = EmbeddingSpace::load(paths.embeddings2);
  if (!paths.paraphrases.empty()) bundle.paraphrases = ParaphraseTable::load(paths.paraphrases);
  if (!paths.idf.empty()) bundle.idf = IdfTable::load(paths.idf);
  if (!paths.taxonomy.empty()) {
    bundle.taxonomy = Taxonomy::load(paths.taxonomy);
    if (!paths.information_content.empty()) {
      auto in = open_resource(paths.information_content);
      bundle.taxonomy->load_information_content(in, paths.information_content);
    }
  } else if (!paths.information_content.empty()) {
    throw ResourceError("information content given without a taxonomy");
  }
  return bundle;
}

std::optional<double> resource_similarity(const LexicalResources& resources,
                                          SimilaritySource source, std::string_view w,
                                          std::string_view v) {
  switch (source) {
    case SimilaritySource::kEmbeddings1:
      return resources.embeddings1 ? resources.embeddings1->similarity(w, v) : std::nullopt;
    case SimilaritySource::kEmbeddings2:
      return resources.embeddings2 ? resources.embeddings2->similarity(w, v) : std::nullopt;
    case SimilaritySource::kParaphrases:
      return resources.paraphrases ? paraphrase_similarity(*resources.paraphrases, w, v)
                                   : std::nullopt;
  }
  return std::nullopt;
}

double word_similarity(const LexicalResources& resources, std::string_view w,
                       std::string_view v) {
  if (to_lower(w) == to_lower(v)) return 1.0;
  double best = 0.0;
  for (SimilaritySource source : kSimilaritySources) {
    if (auto s = resource_similarity(resources, source, w, v)) best = std::max(best, *s);
  }
  return best;
}

}  // namespace ists
