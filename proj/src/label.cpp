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

#include "ists/label.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ists/text.hpp"

namespace ists {

// ---------------------------------------------------------------------------
// Stopwords

const std::vector<std::string>& default_stopword_list() {
  static const std::vector<std::string> words = {
      "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any",
      "are", "as", "at", "be", "because", "been", "before", "being", "below", "between",
      "both", "but", "by", "can", "could", "did", "do", "does", "doing", "down", "during",
      "each", "few", "for", "from", "further", "had", "has", "have", "having", "he", "her",
      "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
      "it", "its", "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not",
      "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves",
      "out", "over", "own", "same", "she", "should", "so", "some", "such", "than", "that",
      "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
      "those", "through", "to", "too", "under", "until", "up", "very", "was", "we", "were",
      "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "would",
      "you", "your", "yours", "yourself", "yourselves", "'s", "'", "\"", ",", ".", ":", ";",
      "!", "?", "-", "--", "(", ")"};
  return words;
}

Stopwords::Stopwords(const std::vector<std::string>& words) {
  for (const std::string& w : words) words_.insert(to_lower(w));
}

const Stopwords& Stopwords::english() {
  static const Stopwords list(default_stopword_list());
  return list;
}

Stopwords Stopwords::parse(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view word = trim(line);
    if (!word.empty()) words.emplace_back(word);
  }
  return Stopwords(words);
}

Stopwords Stopwords::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open stopword list " + path);
  return parse(in);
}

bool Stopwords::contains(std::string_view word) const {
  return words_.count(to_lower(word)) > 0;
}

int chunk_head(const ChunkedSentence& sentence, const std::vector<int>& chunk,
               const Stopwords& stopwords) {
  for (auto it = chunk.rbegin(); it != chunk.rend(); ++it) {
    if (!stopwords.contains(sentence.token(*it).surface)) return *it;
  }
  return chunk.back();
}

// ---------------------------------------------------------------------------
// Features

Eigen::VectorXd FeatureVector::dense() const {
  Eigen::VectorXd x(kDenseSize);
  int k = 0;
  x(k++) = jaccard_all;
  x(k++) = jaccard_content;
  x(k++) = jaccard_stopwords;
  x(k++) = len_diff12;
  x(k++) = len_diff21;
  for (double v : taxonomy_true_root) x(k++) = v;
  for (double v : taxonomy_lcs_root) x(k++) = v;
  x(k++) = head1_more_specific ? 1.0 : 0.0;
  x(k++) = head2_more_specific ? 1.0 : 0.0;
  x(k++) = head_depth_diff;
  x(k++) = min_pair_depth_diff;
  x(k++) = max_pair_depth_diff;
  for (double v : resource_max) x(k++) = v;
  x(k++) = has_taxonomy ? 1.0 : 0.0;
  x(k++) = has_head_depth ? 1.0 : 0.0;
  x(k++) = has_pair_depth ? 1.0 : 0.0;
  for (bool b : has_resource) x(k++) = b ? 1.0 : 0.0;
  return x;
}

namespace {

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t common = 0;
  for (const std::string& w : a) common += b.count(w);
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

std::set<std::string> filtered(const std::set<std::string>& words, const Stopwords& stopwords,
                               bool keep_stopwords) {
  std::set<std::string> out;
  for (const std::string& w : words) {
    if (stopwords.contains(w) == keep_stopwords) out.insert(w);
  }
  return out;
}

// Scale of the true-root lch value, log(2 D).
double lch_scale(const Taxonomy& taxonomy) {
  return std::log(2.0 * std::max(1, taxonomy.max_depth()));
}

}  // namespace

FeatureVector extract_features(const ChunkedSentence& sent1, const std::vector<int>& left,
                               const ChunkedSentence& sent2, const std::vector<int>& right,
                               const LexicalResources& resources, const Stopwords& stopwords) {
  FeatureVector f;
  std::set<std::string> words1, words2;
  for (int i : left) words1.insert(to_lower(sent1.token(i).surface));
  for (int j : right) words2.insert(to_lower(sent2.token(j).surface));
  f.jaccard_all = jaccard(words1, words2);
  f.jaccard_content =
      jaccard(filtered(words1, stopwords, false), filtered(words2, stopwords, false));
  f.jaccard_stopwords =
      jaccard(filtered(words1, stopwords, true), filtered(words2, stopwords, true));
  f.len_diff12 = static_cast<int>(left.size()) - static_cast<int>(right.size());
  f.len_diff21 = -f.len_diff12;

  for (int i : left) f.lemmas1.push_back(sent1.token(i).lemma_or_lower());
  for (int j : right) f.lemmas2.push_back(sent2.token(j).lemma_or_lower());

  if (resources.has_taxonomy()) {
    const Taxonomy& tax = *resources.taxonomy;
    const std::string head1 = sent1.token(chunk_head(sent1, left, stopwords)).lemma_or_lower();
    const std::string head2 = sent2.token(chunk_head(sent2, right, stopwords)).lemma_or_lower();

    constexpr std::array<TaxonomyMeasure, 3> measures = {
        TaxonomyMeasure::kPath, TaxonomyMeasure::kLch, TaxonomyMeasure::kJcn};
    for (int mode = 0; mode < 2; ++mode) {
      auto& slots = mode == 0 ? f.taxonomy_true_root : f.taxonomy_lcs_root;
      const RootMode root = mode == 0 ? RootMode::kTrueRoot : RootMode::kLcsAsRoot;
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const auto v = taxonomy_similarity(tax, head1, head2, measures[m], root);
        if (!v) continue;
        if (measures[m] == TaxonomyMeasure::kPath) f.has_taxonomy = true;
        switch (measures[m]) {
          case TaxonomyMeasure::kPath:
            slots[m] = *v;
            break;
          case TaxonomyMeasure::kLch:
            slots[m] = *v / lch_scale(tax);
            break;
          case TaxonomyMeasure::kJcn:
            slots[m] = *v / (1.0 + *v);
            break;
        }
      }
    }
    f.head1_more_specific = is_more_specific(tax, head1, head2);
    f.head2_more_specific = is_more_specific(tax, head2, head1);

    const auto d1 = tax.lemma_depth(head1);
    const auto d2 = tax.lemma_depth(head2);
    if (d1 && d2) {
      f.has_head_depth = true;
      f.head_depth_diff = *d1 - *d2;
    }

    std::vector<int> depths1, depths2;
    for (const std::string& l : f.lemmas1) {
      if (auto d = tax.lemma_depth(l)) depths1.push_back(*d);
    }
    for (const std::string& l : f.lemmas2) {
      if (auto d = tax.lemma_depth(l)) depths2.push_back(*d);
    }
    for (int a : depths1) {
      for (int b : depths2) {
        const int diff = std::abs(a - b);
        if (!f.has_pair_depth) {
          f.min_pair_depth_diff = f.max_pair_depth_diff = diff;
          f.has_pair_depth = true;
        } else {
          f.min_pair_depth_diff = std::min(f.min_pair_depth_diff, diff);
          f.max_pair_depth_diff = std::max(f.max_pair_depth_diff, diff);
        }
      }
    }
  }

  for (std::size_t s = 0; s < kSimilaritySources.size(); ++s) {
    for (int i : left) {
      for (int j : right) {
        const auto v = resource_similarity(resources, kSimilaritySources[s],
                                           sent1.token(i).surface, sent2.token(j).surface);
        if (!v) continue;
        f.resource_max[s] = f.has_resource[s] ? std::max(f.resource_max[s], *v) : *v;
        f.has_resource[s] = true;
      }
    }
  }
  return f;
}

std::vector<int> hashed_lemmas(const FeatureVector& features, int hash_bits) {
  const std::uint32_t size = 1u << hash_bits;
  std::vector<int> out;
  for (const std::string& l : features.lemmas1) out.push_back(fnv1a(l) & (size - 1));
  for (const std::string& l : features.lemmas2) {
    out.push_back(static_cast<int>(size + (fnv1a(l) & (size - 1))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Training set

namespace {

int best_overlap(const std::vector<Chunk>& chunks, const std::vector<int>& tokens) {
  int best = -1;
  std::size_t best_count = 0;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    std::size_t count = 0;
    for (int t : chunks[c].tokens) {
      count += std::count(tokens.begin(), tokens.end(), t);
    }
    if (count > best_count) {
      best_count = count;
      best = static_cast<int>(c);
    }
  }
  return best;
}

bool trainable(const ChunkAlignment& a) {
  return a.aligned() && is_relation_label(a.label.core);
}

}  // namespace

std::vector<Instance> build_training_set(const std::vector<InterpretablePair>& gold,
                                         TrainingMode mode,
                                         const TrainingComponents& components) {
  static const LexicalResources kNoResources;
  const LexicalResources& resources =
      components.resources ? *components.resources : kNoResources;
  const Stopwords& stopwords = components.stopwords ? *components.stopwords : Stopwords::english();

  std::vector<Instance> out;
  for (const InterpretablePair& pair : gold) {
    for (const ChunkAlignment& a : pair.alignments) {
      if (!trainable(a)) continue;
      out.push_back({extract_features(pair.sent1, a.left, pair.sent2, a.right, resources,
                                      stopwords),
                     a.label.core});
    }
  }
  if (mode == TrainingMode::kGold) return out;

  if (!components.system_chunker) {
    throw std::invalid_argument("mixed training mode needs a system chunker");
  }
  for (const InterpretablePair& pair : gold) {
    const auto [sys1, sys2] = components.system_chunker(pair);
    if (sys1.tokens.size() != pair.sent1.tokens.size() ||
        sys2.tokens.size() != pair.sent2.tokens.size()) {
      throw ValidationError("pair " + pair.id + ": system chunking has a different tokenization");
    }
    for (const ChunkAlignment& a : pair.alignments) {
      if (!trainable(a)) continue;
      const int c1 = best_overlap(sys1.chunks, a.left);
      const int c2 = best_overlap(sys2.chunks, a.right);
      if (c1 < 0 || c2 < 0) continue;
      out.push_back({extract_features(sys1, sys1.chunks[c1].tokens, sys2, sys2.chunks[c2].tokens,
                                      resources, stopwords),
                     a.label.core});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classifier

namespace {

constexpr int kClasses = static_cast<int>(kRelationLabels.size());

int class_index(CoreLabel label) {
  for (int k = 0; k < kClasses; ++k) {
    if (kRelationLabels[k] == label) return k;
  }
  throw std::invalid_argument("not a relation label: " + std::string(label_name(label)));
}

int model_dimension(int hash_bits) { return FeatureVector::kDenseSize + (2 << hash_bits); }

struct Encoded {
  Eigen::VectorXd dense;  // raw
  std::vector<int> sparse;
  int y = 0;
};

void fit_scaler(const std::vector<const Encoded*>& rows, LabelModel& model) {
  const int d = FeatureVector::kDenseSize;
  model.mean = Eigen::VectorXd::Zero(d);
  model.scale = Eigen::VectorXd::Ones(d);
  if (rows.empty()) return;
  for (const Encoded* r : rows) model.mean += r->dense;
  model.mean /= static_cast<double>(rows.size());
  Eigen::VectorXd var = Eigen::VectorXd::Zero(d);
  for (const Encoded* r : rows) var += (r->dense - model.mean).cwiseAbs2();
  var /= static_cast<double>(rows.size());
  for (int k = 0; k < d; ++k) model.scale(k) = var(k) > 1e-12 ? std::sqrt(var(k)) : 1.0;
}

Eigen::VectorXd scores(const LabelModel& model, const Eigen::VectorXd& standard,
                       const std::vector<int>& sparse) {
  const int d = FeatureVector::kDenseSize;
  Eigen::VectorXd s = model.bias + model.weights.leftCols(d) * standard;
  for (int j : sparse) s += model.weights.col(d + j);
  return s;
}

// Softmax regression with L2, Nesterov-accelerated full-batch gradient
// descent with a 1/L step.
LabelModel fit(const std::vector<const Encoded*>& rows, double lambda, int iterations,
               int hash_bits) {
  LabelModel model = LabelModel::zeros(hash_bits);
  model.lambda = lambda;
  fit_scaler(rows, model);
  const int d = FeatureVector::kDenseSize;
  const int dim = model.dimension();
  const double n = static_cast<double>(rows.size());

  std::vector<Eigen::VectorXd> standard;
  standard.reserve(rows.size());
  double max_norm = 0.0;
  for (const Encoded* r : rows) {
    standard.push_back((r->dense - model.mean).cwiseQuotient(model.scale));
    max_norm = std::max(max_norm, standard.back().squaredNorm() + r->sparse.size() + 1.0);
  }
  const double step = 1.0 / (0.5 * max_norm + lambda);

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(kClasses, dim), w_prev = w, look = w;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(kClasses), b_prev = b, b_look = b;
  Eigen::MatrixXd grad(kClasses, dim);
  Eigen::VectorXd grad_b(kClasses);
  LabelModel probe = model;

  for (int it = 1; it <= iterations; ++it) {
    const double momentum = (it - 1.0) / (it + 2.0);
    look = w + momentum * (w - w_prev);
    b_look = b + momentum * (b - b_prev);
    probe.weights = look;
    probe.bias = b_look;

    grad = lambda * look;
    grad_b.setZero();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Eigen::VectorXd p = scores(probe, standard[i], rows[i]->sparse);
      p = (p.array() - p.maxCoeff()).exp();
      p /= p.sum();
      p(rows[i]->y) -= 1.0;
      p /= n;
      grad.leftCols(d).noalias() += p * standard[i].transpose();
      for (int j : rows[i]->sparse) grad.col(d + j) += p;
      grad_b += p;
    }
    w_prev = w;
    b_prev = b;
    w = look - step * grad;
    b = b_look - step * grad_b;
  }
  model.weights = std::move(w);
  model.bias = std::move(b);
  return model;
}

int predict_index(const LabelModel& model, const Eigen::VectorXd& raw,
                  const std::vector<int>& sparse) {
  const Eigen::VectorXd standard = (raw - model.mean).cwiseQuotient(model.scale);
  const Eigen::VectorXd s = scores(model, standard, sparse);
  int best = class_index(kLabelTieOrder[0]);
  for (CoreLabel label : kLabelTieOrder) {
    const int k = class_index(label);
    if (s(k) > s(best)) best = k;
  }
  return best;
}

void check_layout(const LabelModel& model) {
  const int d = FeatureVector::kDenseSize;
  if (model.mean.size() != d || model.scale.size() != d || model.bias.size() != kClasses ||
      model.weights.rows() != kClasses || model.dimension() != model_dimension(model.hash_bits)) {
    throw std::invalid_argument("label model does not match the feature layout (dimension " +
                                std::to_string(model.dimension()) + ", expected " +
                                std::to_string(model_dimension(model.hash_bits)) + ")");
  }
}

}  // namespace

LabelModel LabelModel::zeros(int hash_bits) {
  if (hash_bits < 1 || hash_bits > 24) throw std::invalid_argument("hash_bits out of range");
  LabelModel m;
  m.hash_bits = hash_bits;
  m.mean = Eigen::VectorXd::Zero(FeatureVector::kDenseSize);
  m.scale = Eigen::VectorXd::Ones(FeatureVector::kDenseSize);
  m.weights = Eigen::MatrixXd::Zero(kClasses, model_dimension(hash_bits));
  m.bias = Eigen::VectorXd::Zero(kClasses);
  return m;
}

TrainResult train_labeler(const std::vector<Instance>& instances, const TrainOptions& options) {
  std::set<CoreLabel> distinct;
  for (const Instance& inst : instances) distinct.insert(inst.label);
  if (distinct.size() < 2) {
    throw std::invalid_argument("training needs at least two distinct labels");
  }
  if (options.grid.empty() || options.folds < 2) {
    throw std::invalid_argument("training needs a grid and at least two folds");
  }

  std::vector<Encoded> encoded;
  encoded.reserve(instances.size());
  for (const Instance& inst : instances) {
    encoded.push_back({inst.features.dense(), hashed_lemmas(inst.features, options.hash_bits),
                       class_index(inst.label)});
  }

  std::vector<std::size_t> order(encoded.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.seed);
  std::shuffle(order.begin(), order.end(), rng);
  const int folds = std::min<int>(options.folds, static_cast<int>(encoded.size()));

  TrainResult result;
  double best_accuracy = -1.0;
  double best_lambda = options.grid.front();
  for (double lambda : options.grid) {
    double accuracy_sum = 0.0;
    for (int k = 0; k < folds; ++k) {
      std::vector<const Encoded*> train, held;
      for (std::size_t i = 0; i < order.size(); ++i) {
        (static_cast<int>(i % folds) == k ? held : train).push_back(&encoded[order[i]]);
      }
      const LabelModel m = fit(train, lambda, options.iterations, options.hash_bits);
      int correct = 0;
      for (const Encoded* e : held) correct += predict_index(m, e->dense, e->sparse) == e->y;
      accuracy_sum += static_cast<double>(correct) / static_cast<double>(held.size());
    }
    const double accuracy = accuracy_sum / folds;
    result.cv.emplace_back(lambda, accuracy);
    if (accuracy > best_accuracy) {
      best_accuracy = accuracy;
      best_lambda = lambda;
    }
  }

  std::vector<const Encoded*> all;
  for (const Encoded& e : encoded) all.push_back(&e);
  result.model = fit(all, best_lambda, options.iterations, options.hash_bits);
  result.model.cv_accuracy = best_accuracy;
  result.model.seed = options.seed;
  result.model.instances = static_cast<long>(encoded.size());
  return result;
}

CoreLabel predict_label(const LabelModel& model, const FeatureVector& features) {
  check_layout(model);
  return kRelationLabels[predict_index(model, features.dense(),
                                       hashed_lemmas(features, model.hash_bits))];
}

void baseline_label(std::vector<ChunkAlignment>& records) {
  for (ChunkAlignment& a : records) {
    if (a.aligned()) {
      a.label = AlignmentLabel{CoreLabel::kEqui, false, false};
      a.score = kMaxScore;
    } else {
      a.score = std::nullopt;
    }
  }
}

void model_label(InterpretablePair& pair, const LabelModel& model,
                 const LexicalResources& resources, const Stopwords& stopwords) {
  for (ChunkAlignment& a : pair.alignments) {
    if (!a.aligned()) continue;
    const FeatureVector f =
        extract_features(pair.sent1, a.left, pair.sent2, a.right, resources, stopwords);
    a.label = AlignmentLabel{predict_label(model, f), false, false};
  }
}

// ---------------------------------------------------------------------------
// Model file

namespace {

constexpr const char* kMagic = "ists-label-model";

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_num(std::string_view text, const std::string& where) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(where + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

void LabelModel::save(std::ostream& out) const {
  check_layout(*this);
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "hash_bits " << hash_bits << '\n';
  out << "dense " << FeatureVector::kDenseSize << '\n';
  out << "dimension " << dimension() << '\n';
  out << "labels";
  for (CoreLabel l : kRelationLabels) out << ' ' << label_name(l);
  out << '\n';
  out << "lambda " << num(lambda) << '\n';
  out << "cv_accuracy " << num(cv_accuracy) << '\n';
  out << "seed " << seed << '\n';
  out << "instances " << instances << '\n';
  out << "mean";
  for (Eigen::Index k = 0; k < mean.size(); ++k) out << ' ' << num(mean(k));
  out << "\nscale";
  for (Eigen::Index k = 0; k < scale.size(); ++k) out << ' ' << num(scale(k));
  out << "\nbias";
  for (Eigen::Index k = 0; k < bias.size(); ++k) out << ' ' << num(bias(k));
  out << '\n';
  for (int c = 0; c < kClasses; ++c) {
    out << "row " << label_name(kRelationLabels[c]);
    for (Eigen::Index j = 0; j < weights.cols(); ++j) {
      if (weights(c, j) != 0.0) out << ' ' << j << ':' << num(weights(c, j));
    }
    out << '\n';
  }
  out << "end\n";
}

void LabelModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model " + path);
  save(out);
  if (!out) throw Error("cannot write model " + path);
}

LabelModel LabelModel::load(std::istream& in, const std::string& source) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto fields = split_ws(line);
    if (!fields.empty()) lines.push_back(std::move(fields));
  }
  std::size_t at = 0;
  auto expect = [&](const char* key, std::size_t min_fields) -> const std::vector<std::string>& {
    if (at >= lines.size() || lines[at][0] != key || lines[at].size() < min_fields) {
      throw ParseError(source + ": expected '" + key + "' line");
    }
    return lines[at++];
  };

  const auto& head = expect(kMagic, 2);
  if (head[1] != std::to_string(kFormatVersion)) {
    throw ParseError(source + ": unsupported model version " + head[1]);
  }
  const int bits = static_cast<int>(parse_num(expect("hash_bits", 2)[1], source));
  if (bits < 1 || bits > 24) throw ParseError(source + ": hash_bits out of range");
  LabelModel m = zeros(bits);
  if (parse_num(expect("dense", 2)[1], source) != FeatureVector::kDenseSize) {
    throw ParseError(source + ": dense feature size mismatch");
  }
  if (parse_num(expect("dimension", 2)[1], source) != m.dimension()) {
    throw ParseError(source + ": dimension mismatch");
  }
  const auto& labels = expect("labels", 1 + kClasses);
  for (int c = 0; c < kClasses; ++c) {
    if (labels[1 + c] != label_name(kRelationLabels[c])) {
      throw ParseError(source + ": unexpected label list");
    }
  }
  m.lambda = parse_num(expect("lambda", 2)[1], source);
  m.cv_accuracy = parse_num(expect("cv_accuracy", 2)[1], source);
  m.seed = std::stoull(expect("seed", 2)[1]);
  m.instances = static_cast<long>(parse_num(expect("instances", 2)[1], source));
  auto vector_line = [&](const char* key, Eigen::VectorXd& v) {
    const auto& f = expect(key, 1);
    if (static_cast<Eigen::Index>(f.size()) != v.size() + 1) {
      throw ParseError(source + ": wrong length for '" + key + "'");
    }
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = parse_num(f[k + 1], source);
  };
  vector_line("mean", m.mean);
  vector_line("scale", m.scale);
  vector_line("bias", m.bias);
  for (int c = 0; c < kClasses; ++c) {
    const auto& f = expect("row", 2);
    if (f[1] != label_name(kRelationLabels[c])) throw ParseError(source + ": row out of order");
    for (std::size_t k = 2; k < f.size(); ++k) {
      const auto colon = f[k].find(':');
      if (colon == std::string::npos) throw ParseError(source + ": bad weight '" + f[k] + "'");
      const double j = parse_num(std::string_view(f[k]).substr(0, colon), source);
      if (j < 0 || j >= m.dimension()) throw ParseError(source + ": weight index out of range");
      m.weights(c, static_cast<Eigen::Index>(j)) =
          parse_num(std::string_view(f[k]).substr(colon + 1), source);
    }
  }
  expect("end", 1);
  return m;
}

LabelModel LabelModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open model " + path);
  return load(in, path);
}

}  // namespace ists
