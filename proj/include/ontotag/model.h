// Copyright 2026 The Ontotag Authors.
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

// Multi-class classifier over short token sequences. Feature embeddings
// (word unigrams and boundary-padded character 3/4-grams) are averaged into
// a representation C, and the output layer computes
//
//   P = softmax(W C + b)
//
// over N concept labels plus the reserved NONE row. Trained with mini-batch
// Adam on mean cross-entropy, with early stopping on dev accuracy.

#ifndef ONTOTAG_MODEL_H_
#define ONTOTAG_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontotag/dataset.h"

namespace ontotag {

struct Prediction {
  size_t row = 0;
  std::string label;
  double score = 0.0;
};

// What the recognizer needs from a classifier. Model implements it; other
// backbones can be swapped in behind the same surface.
class Classifier {
 public:
  virtual ~Classifier() = default;
  // `tokens` are lowercase.
  virtual Prediction Predict(std::span<const std::string> tokens) const = 0;
};

// Feature strings for one token: "w:<token>" plus "c:<gram>" for every
// character 3- and 4-gram of "<token>".
std::vector<std::string> TokenFeatures(std::string_view token);

class FeatureVocab {
 public:
  FeatureVocab() = default;
  // Sorted, de-duplicated features of every instance.
  static FeatureVocab Build(const std::vector<TrainingInstance> &instances);
  explicit FeatureVocab(std::vector<std::string> features);

  int32_t Find(std::string_view feature) const;
  size_t size() const { return features_.size(); }
  const std::vector<std::string> &features() const { return features_; }

  // In-vocabulary feature indices of a token sequence, one per occurrence.
  std::vector<int32_t> Encode(std::span<const std::string> tokens) const;

 private:
  std::vector<std::string> features_;
  std::unordered_map<std::string, int32_t> index_;
};

struct TrainConfig {
  double learning_rate = 1e-4;
  int batch_size = 128;
  int max_epochs = 50;
  int patience = 5;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  int dim = 128;
  uint64_t seed = 1;

  void Validate() const;
};

// Row-major dense matrix.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double *row(size_t r) { return data.data() + r * cols; }
  const double *row(size_t r) const { return data.data() + r * cols; }
  friend bool operator==(const Matrix &, const Matrix &) = default;
};

class Model : public Classifier {
 public:
  Model() = default;
  // Embeddings uniform in +-1/sqrt(dim) from `seed`; W and b zero. Row 0 of
  // the label index is NONE, followed by the concept labels in sorted order.
  Model(FeatureVocab vocab, const std::vector<std::string> &labels, int dim, uint64_t seed);

  const FeatureVocab &vocab() const { return vocab_; }
  const std::vector<std::string> &labels() const { return labels_; }
  int32_t LabelRow(std::string_view label) const;
  size_t num_rows() const { return labels_.size(); }
  int dim() const { return dim_; }

  Matrix &embeddings() { return embeddings_; }
  Matrix &weights() { return weights_; }
  std::vector<double> &bias() { return bias_; }
  const Matrix &embeddings() const { return embeddings_; }
  const Matrix &weights() const { return weights_; }
  const std::vector<double> &bias() const { return bias_; }

  TrainConfig &config() { return config_; }
  const TrainConfig &config() const { return config_; }

  // Mean of the embeddings of the given feature occurrences; zero if empty.
  std::vector<double> EncodeFeatures(std::span<const int32_t> features) const;
  std::vector<double> Encode(std::span<const std::string> tokens) const;

  // Class probabilities for a representation.
  std::vector<double> Probabilities(std::span<const double> representation) const;
  std::vector<double> Forward(std::span<const std::string> tokens) const;

  // argmax row, lowest index on ties.
  Prediction Predict(std::span<const std::string> tokens) const override;

  void Save(std::ostream &out) const;
  static Model Load(std::istream &in);
  void SaveFile(const std::string &path) const;
  static Model LoadFile(const std::string &path);

 private:
  FeatureVocab vocab_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int32_t> label_rows_;
  int dim_ = 0;
  Matrix embeddings_;       // V x d
  Matrix weights_;          // (N+1) x d
  std::vector<double> bias_;  // N+1
  TrainConfig config_;
};

// Numerically stable softmax (max subtraction).
std::vector<double> Softmax(std::span<const double> logits);

// Adam moment state for one flat parameter block.
struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  explicit AdamState(size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
};

// One bias-corrected Adam update at step t >= 1:
//   m <- b1 m + (1-b1) g,  v <- b2 v + (1-b2) g^2
//   p <- p - lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
void AdamStep(std::span<double> params, std::span<const double> grads, AdamState &state,
              int64_t t, const TrainConfig &config);

// Gradients of the mean cross-entropy over a batch.
struct Gradients {
  Matrix embeddings;
  Matrix weights;
  std::vector<double> bias;
};

// Mean loss of `batch` and, if `grads` is non-null, its gradients.
double BatchLoss(const Model &model, std::span<const std::vector<int32_t>> features,
                 std::span<const int32_t> rows, Gradients *grads);

struct TrainResult {
  Model model;
  int epochs_run = 0;
  int best_epoch = 0;
  std::vector<double> epoch_loss;
  std::vector<double> dev_accuracy;
  double train_accuracy = 0.0;
};

// Throws Error(kConfig) for dev labels unseen in training and
// Error(kTraining) on a non-finite gradient.
TrainResult Train(const std::vector<TrainingInstance> &train,
                  const std::vector<TrainingInstance> &dev, const TrainConfig &config);

// Fraction of instances whose predicted label equals the gold label.
double Accuracy(const Classifier &model, const std::vector<TrainingInstance> &instances);

}  // namespace ontotag

#endif  // ONTOTAG_MODEL_H_
