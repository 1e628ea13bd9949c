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

// Lexical resources used for alignment, labeling and scoring.
//
// File formats (UTF-8, one entry per line):
//   embeddings   word f1 f2 ... fD        (optional word2vec "N D" header)
//   paraphrases  w1 TAB w2 TAB p(w2|w1)
//   idf          word TAB idf             ("#default TAB value" sets the default)
//   taxonomy     synsetId TAB pos TAB lemma1,lemma2 TAB hyper1,hyper2
//   ic           synsetId TAB ic

#ifndef ISTS_RESOURCES_HPP_
#define ISTS_RESOURCES_HPP_

#include <Eigen/Dense>

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ists/core.hpp"

namespace ists {

// Word vectors plus the running maximum of distances observed between
// word pairs, used to turn Euclidean distances into similarities.
class EmbeddingSpace {
 public:
  EmbeddingSpace() = default;
  explicit EmbeddingSpace(int dimension) : dimension_(dimension) {}

  static EmbeddingSpace parse(std::istream& in, const std::string& source);
  static EmbeddingSpace load(const std::string& path);

  void add(const std::string& word, Eigen::VectorXd vector);

  int dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  // Exact match first, then lowercased.
  const Eigen::VectorXd* find(std::string_view word) const;

  std::optional<double> distance(std::string_view w, std::string_view v) const;
  // Folds the distance of (w, v) into the running maximum.
  std::optional<double> observe(std::string_view w, std::string_view v);
  double max_distance() const { return max_distance_; }

  // 1 - d / max(D) where max(D) already includes d, so an unobserved pair
  // behaves as if it had just been observed. Absent for OOV words.
  std::optional<double> similarity(std::string_view w, std::string_view v) const;

 private:
  int dimension_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Eigen::VectorXd> vectors_;
  double max_distance_ = 0.0;
};

// Observes the pair, then returns its similarity.
std::optional<double> embedding_similarity(EmbeddingSpace& space, std::string_view w,
                                           std::string_view v);

class ParaphraseTable {
 public:
  static ParaphraseTable parse(std::istream& in, const std::string& source);
  static ParaphraseTable load(const std::string& path);

  // Directional p(to | from); words are lowercased.
  void add(std::string_view from, std::string_view to, double probability);
  std::optional<double> probability(std::string_view from, std::string_view to) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, double> entries_;
};

// Mean of both directions when present, the single direction otherwise.
std::optional<double> paraphrase_similarity(const ParaphraseTable& table, std::string_view w,
                                            std::string_view v);

class IdfTable {
 public:
  static IdfTable parse(std::istream& in, const std::string& source);
  static IdfTable load(const std::string& path);

  void add(std::string_view word, double idf);
  void set_default(double idf);
  double idf(std::string_view word) const;
  double default_idf() const;

 private:
  std::unordered_map<std::string, double> idf_;
  std::optional<double> default_;
  double max_idf_ = 0.0;
};

struct Synset {
  std::string id;
  std::string pos;
  std::vector<std::string> lemmas;
  std::vector<int> hypernyms;
  std::vector<int> hyponyms;
  int depth = 0;   // root depth 1
  int height = 0;  // longest downward path to a leaf
  double ic = 0.0;
};

class Taxonomy {
 public:
  struct Entry {
    std::string id;
    std::string pos;
    std::vector<std::string> lemmas;
    std::vector<std::string> hypernyms;
  };

  // Throws ResourceError on unknown hypernym ids and cycles.
  static Taxonomy build(const std::vector<Entry>& entries);
  static Taxonomy parse(std::istream& in, const std::string& source);
  static Taxonomy load(const std::string& path);

  void load_information_content(std::istream& in, const std::string& source);
  void set_information_content(const std::string& id, double ic);
  bool has_information_content() const { return has_ic_; }

  const std::vector<int>& senses(std::string_view lemma) const;
  bool contains(std::string_view lemma) const { return !senses(lemma).empty(); }
  const Synset& synset(int s) const { return synsets_.at(s); }
  std::optional<int> find(const std::string& id) const;
  std::size_t size() const { return synsets_.size(); }
  int max_depth() const { return max_depth_; }
  // Shallowest sense depth of a lemma.
  std::optional<int> lemma_depth(std::string_view lemma) const;
  // Every ancestor of `s` (including itself) with its shortest upward
  // edge distance.
  std::map<int, int> ancestors(int s) const;

 private:
  std::vector<Synset> synsets_;
  std::unordered_map<std::string, int> by_id_;
  std::unordered_map<std::string, std::vector<int>> by_lemma_;
  int max_depth_ = 0;
  bool has_ic_ = false;
};

enum class TaxonomyMeasure { kPath, kLch, kJcn };
enum class RootMode { kTrueRoot, kLcsAsRoot };

inline constexpr double kJcnEpsilon = 1e-6;

// Maximum of the measure over all sense pairs of the two lemmas. Absent if
// either lemma is unknown, no sense pair shares a subsumer, or jcn is
// requested without information content.
std::optional<double> taxonomy_similarity(const Taxonomy& taxonomy, std::string_view lemma_a,
                                          std::string_view lemma_b, TaxonomyMeasure measure,
                                          RootMode mode);

// True iff some sense of `lemma_a` is a strict descendant of some sense of
// `lemma_b`.
bool is_more_specific(const Taxonomy& taxonomy, std::string_view lemma_a,
                      std::string_view lemma_b);

struct ResourcePaths {
  std::string embeddings1;
  std::string embeddings2;
  std::string paraphrases;
  std::string idf;
  std::string taxonomy;
  std::string information_content;

  bool any() const;
};

// Read-only once loaded and observed; every component is optional.
struct LexicalResources {
  std::optional<EmbeddingSpace> embeddings1;
  std::optional<EmbeddingSpace> embeddings2;
  std::optional<ParaphraseTable> paraphrases;
  std::optional<IdfTable> idf;
  std::optional<Taxonomy> taxonomy;

  bool has_embeddings1() const { return embeddings1.has_value(); }
  bool has_embeddings2() const { return embeddings2.has_value(); }
  bool has_paraphrases() const { return paraphrases.has_value(); }
  bool has_idf() const { return idf.has_value(); }
  bool has_taxonomy() const { return taxonomy.has_value(); }
  bool has_information_content() const {
    return taxonomy && taxonomy->has_information_content();
  }

  // 1.0 everywhere without an idf table.
  double idf_of(std::string_view word) const;
  // First pass of the two-pass distance normalisation.
  void observe(std::string_view w, std::string_view v);
};

LexicalResources load_resources(const ResourcePaths& paths);

enum class SimilaritySource { kEmbeddings1, kEmbeddings2, kParaphrases };
inline constexpr std::array<SimilaritySource, 3> kSimilaritySources = {
    SimilaritySource::kEmbeddings1, SimilaritySource::kEmbeddings2,
    SimilaritySource::kParaphrases};

std::optional<double> resource_similarity(const LexicalResources& resources,
                                          SimilaritySource source, std::string_view w,
                                          std::string_view v);

// 1.0 for case-insensitively equal words; otherwise the maximum over the
// available resources, 0.0 when none knows the pair.
double word_similarity(const LexicalResources& resources, std::string_view w,
                       std::string_view v);

}  // namespace ists

#endif  // ISTS_RESOURCES_HPP_
