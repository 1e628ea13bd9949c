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

#ifndef ISTS_LABEL_HPP_
#define ISTS_LABEL_HPP_

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ists/core.hpp"
#include "ists/resources.hpp"

namespace ists {

class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(const std::vector<std::string>& words);

  // Built-in English list (same content as data/stopwords_en.txt).
  static const Stopwords& english();
  static Stopwords parse(std::istream& in);
  static Stopwords load(const std::string& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

const std::vector<std::string>& default_stopword_list();

// Last non-stopword token of the chunk; the last token when every token is a
// stopword.
int chunk_head(const ChunkedSentence& sentence, const std::vector<int>& chunk,
               const Stopwords& stopwords);

struct FeatureVector {
  double jaccard_all = 0.0;        // f1
  double jaccard_content = 0.0;    // f2
  double jaccard_stopwords = 0.0;  // f3
  int len_diff12 = 0;              // f4
  int len_diff21 = 0;              // f5
  // f6-f8 (true root) and f9-f11 (lcs as root): path, lch, jcn.
  std::array<double, 3> taxonomy_true_root{};
  std::array<double, 3> taxonomy_lcs_root{};
  bool head1_more_specific = false;  // f12
  bool head2_more_specific = false;  // f13
  int head_depth_diff = 0;           // f14
  int min_pair_depth_diff = 0;       // f15
  int max_pair_depth_diff = 0;       // f16
  std::vector<std::string> lemmas1;  // f17
  std::vector<std::string> lemmas2;  // f18
  // f19-f21: embeddings1, embeddings2, paraphrases.
  std::array<double, 3> resource_max{};

  bool has_taxonomy = false;
  bool has_head_depth = false;
  bool has_pair_depth = false;
  std::array<bool, 3> has_resource{};

  // Real-valued block: f1-f16, f19-f21, then the presence flags.
  static constexpr int kDenseSize = 25;
  Eigen::VectorXd dense() const;
};

FeatureVector extract_features(const ChunkedSentence& sent1, const std::vector<int>& left,
                               const ChunkedSentence& sent2, const std::vector<int>& right,
                               const LexicalResources& resources, const Stopwords& stopwords);

inline constexpr int kDefaultHashBits = 15;

// Hashed bag-of-lemmas block: side 1 in [0, 2^bits), side 2 in
// [2^bits, 2^(bits+1)). Sorted, no duplicates.
std::vector<int> hashed_lemmas(const FeatureVector& features, int hash_bits);

struct Instance {
  FeatureVector features;
  CoreLabel label = CoreLabel::kEqui;
};

enum class TrainingMode { kGold, kMixed };

// System chunking for a gold pair in mixed mode.
using SystemChunker =
    std::function<std::pair<ChunkedSentence, ChunkedSentence>(const InterpretablePair&)>;

struct TrainingComponents {
  const LexicalResources* resources = nullptr;
  const Stopwords* stopwords = nullptr;
  SystemChunker system_chunker;  // required by mixed mode
};

// Gold mode: one instance per aligned gold record with a relation label.
// Mixed mode: the gold instances followed by the same records projected onto
// the system chunks of maximal token overlap on each side. FACT/POL are
// dropped, ALIC/NOALI excluded.
std::vector<Instance> build_training_set(const std::vector<InterpretablePair>& gold,
                                         TrainingMode mode,
                                         const TrainingComponents& components);

// Prediction order for ties.
inline constexpr std::array<CoreLabel, 6> kLabelTieOrder = {
    CoreLabel::kEqui, CoreLabel::kSpe1, CoreLabel::kSpe2,
    CoreLabel::kSimi, CoreLabel::kRel,  CoreLabel::kOppo};

struct LabelModel {
  static constexpr int kFormatVersion = 1;

  int hash_bits = kDefaultHashBits;
  // Standardisation of the dense block.
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;
  // One row per label of kRelationLabels; columns = dense then hashed.
  Eigen::MatrixXd weights;
  Eigen::VectorXd bias;

  double lambda = 0.0;
  double cv_accuracy = 0.0;
  std::uint64_t seed = 0;
  long instances = 0;

  static LabelModel zeros(int hash_bits = kDefaultHashBits);

  int dimension() const { return static_cast<int>(weights.cols()); }

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static LabelModel load(std::istream& in, const std::string& source = "<stream>");
  static LabelModel load_file(const std::string& path);
};

inline constexpr std::array<double, 4> kDefaultLambdaGrid = {1e-4, 1e-3, 1e-2, 1e-1};

struct TrainOptions {
  int folds = 5;
  std::vector<double> grid{kDefaultLambdaGrid.begin(), kDefaultLambdaGrid.end()};
  std::uint64_t seed = 1;
  int iterations = 300;
  int hash_bits = kDefaultHashBits;
};

struct TrainResult {
  LabelModel model;
  // Mean CV accuracy per grid value.
  std::vector<std::pair<double, double>> cv;
};

// Throws std::invalid_argument with fewer than two distinct labels.
TrainResult train_labeler(const std::vector<Instance>& instances, const TrainOptions& options);

// Throws std::invalid_argument when the model does not match the feature
// layout.
CoreLabel predict_label(const LabelModel& model, const FeatureVector& features);

// Aligned records become EQUI/5; ALIC/NOALI keep their label with NIL.
void baseline_label(std::vector<ChunkAlignment>& records);

// Relabels aligned records with the model (flags cleared). Scores untouched.
void model_label(InterpretablePair& pair, const LabelModel& model,
                 const LexicalResources& resources, const Stopwords& stopwords);

}  // namespace ists

#endif  // ISTS_LABEL_HPP_
