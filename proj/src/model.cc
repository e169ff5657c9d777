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

#include "ontotag/model.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "ontotag/error.h"
#include "ontotag/random.h"

namespace ontotag {

std::vector<std::string> TokenFeatures(std::string_view token) {
  std::vector<std::string> out;
  out.push_back("w:" + std::string(token));
  const std::string padded = "<" + std::string(token) + ">";
  for (size_t n : {3, 4}) {
    for (size_t i = 0; i + n <= padded.size(); ++i) {
      out.push_back("c:" + padded.substr(i, n));
    }
  }
  return out;
}

FeatureVocab::FeatureVocab(std::vector<std::string> features)
    : features_(std::move(features)) {
  index_.reserve(features_.size());
  for (size_t i = 0; i < features_.size(); ++i) {
    if (!index_.emplace(features_[i], static_cast<int32_t>(i)).second) {
      throw Error(ErrorKind::kValidation, "duplicate feature " + features_[i]);
    }
  }
}

FeatureVocab FeatureVocab::Build(const std::vector<TrainingInstance> &instances) {
  std::set<std::string> all;
  for (const auto &inst : instances) {
    for (const auto &tok : inst.tokens) {
      for (auto &f : TokenFeatures(tok)) all.insert(std::move(f));
    }
  }
  return FeatureVocab(std::vector<std::string>(all.begin(), all.end()));
}

int32_t FeatureVocab::Find(std::string_view feature) const {
  auto it = index_.find(std::string(feature));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int32_t> FeatureVocab::Encode(std::span<const std::string> tokens) const {
  std::vector<int32_t> out;
  for (const auto &tok : tokens) {
    for (const auto &f : TokenFeatures(tok)) {
      if (int32_t i = Find(f); i >= 0) out.push_back(i);
    }
  }
  return out;
}

void TrainConfig::Validate() const {
  if (!(learning_rate > 0) || batch_size <= 0 || max_epochs <= 0 || patience <= 0 ||
      dim <= 0 || !(adam_beta1 >= 0 && adam_beta1 < 1) ||
      !(adam_beta2 >= 0 && adam_beta2 < 1) || !(adam_epsilon > 0)) {
    throw Error(ErrorKind::kConfig, "training rates and sizes must be positive");
  }
}

Model::Model(FeatureVocab vocab, const std::vector<std::string> &labels, int dim,
             uint64_t seed)
    : vocab_(std::move(vocab)), dim_(dim) {
  if (dim <= 0) throw Error(ErrorKind::kConfig, "representation width must be positive");
  std::set<std::string> sorted(labels.begin(), labels.end());
  sorted.erase(std::string(kNoneLabel));
  labels_.push_back(std::string(kNoneLabel));
  labels_.insert(labels_.end(), sorted.begin(), sorted.end());
  for (size_t r = 0; r < labels_.size(); ++r) label_rows_[labels_[r]] = static_cast<int32_t>(r);

  embeddings_ = Matrix(vocab_.size(), dim);
  Rng rng(seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(dim));
  for (double &x : embeddings_.data) x = rng.Uniform(-bound, bound);
  weights_ = Matrix(labels_.size(), dim);
  bias_.assign(labels_.size(), 0.0);
  config_.dim = dim;
  config_.seed = seed;
}

int32_t Model::LabelRow(std::string_view label) const {
  auto it = label_rows_.find(std::string(label));
  return it == label_rows_.end() ? -1 : it->second;
}

std::vector<double> Model::EncodeFeatures(std::span<const int32_t> features) const {
  std::vector<double> c(dim_, 0.0);
  if (features.empty()) return c;
  for (int32_t f : features) {
    const double *e = embeddings_.row(f);
    for (int k = 0; k < dim_; ++k) c[k] += e[k];
  }
  const double inv = 1.0 / static_cast<double>(features.size());
  for (double &x : c) x *= inv;
  return c;
}

std::vector<double> Model::Encode(std::span<const std::string> tokens) const {
  return EncodeFeatures(vocab_.Encode(tokens));
}

std::vector<double> Softmax(std::span<const double> logits) {
  std::vector<double> p(logits.begin(), logits.end());
  if (p.empty()) return p;
  const double mx = *std::max_element(p.begin(), p.end());
  double sum = 0.0;
  for (double &x : p) {
    x = std::exp(x - mx);
    sum += x;
  }
  for (double &x : p) x /= sum;
  return p;
}

std::vector<double> Model::Probabilities(std::span<const double> c) const {
  std::vector<double> logits(labels_.size());
  for (size_t r = 0; r < labels_.size(); ++r) {
    const double *w = weights_.row(r);
    double z = bias_[r];
    for (int k = 0; k < dim_; ++k) z += w[k] * c[k];
    logits[r] = z;
  }
  return Softmax(logits);
}

std::vector<double> Model::Forward(std::span<const std::string> tokens) const {
  return Probabilities(Encode(tokens));
}

Prediction Model::Predict(std::span<const std::string> tokens) const {
  std::vector<double> p = Forward(tokens);
  size_t best = 0;
  for (size_t r = 1; r < p.size(); ++r) {
    if (p[r] > p[best]) best = r;
  }
  return Prediction{best, labels_[best], p[best]};
}

void AdamStep(std::span<double> params, std::span<const double> grads, AdamState &state,
              int64_t t, const TrainConfig &config) {
  const double b1 = config.adam_beta1, b2 = config.adam_beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(t));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(t));
  for (size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * g;
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * g * g;
    const double m_hat = state.m[i] / c1;
    const double v_hat = state.v[i] / c2;
    params[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.adam_epsilon);
  }
}

double BatchLoss(const Model &model, std::span<const std::vector<int32_t>> features,
                 std::span<const int32_t> rows, Gradients *grads) {
  const size_t batch = features.size();
  const int d = model.dim();
  const size_t nrows = model.num_rows();
  if (grads) {
    grads->embeddings = Matrix(model.vocab().size(), d);
    grads->weights = Matrix(nrows, d);
    grads->bias.assign(nrows, 0.0);
  }
  if (batch == 0) return 0.0;
  const double scale = 1.0 / static_cast<double>(batch);
  double loss = 0.0;
  std::vector<double> dc(d);
  for (size_t i = 0; i < batch; ++i) {
    std::vector<double> c = model.EncodeFeatures(features[i]);
    std::vector<double> p = model.Probabilities(c);
    const auto y = static_cast<size_t>(rows[i]);
    loss -= std::log(std::max(p[y], 1e-300));
    if (!grads) continue;
    std::fill(dc.begin(), dc.end(), 0.0);
    for (size_t r = 0; r < nrows; ++r) {
      const double dz = (p[r] - (r == y ? 1.0 : 0.0)) * scale;
      grads->bias[r] += dz;
      double *gw = grads->weights.row(r);
      const double *w = model.weights().row(r);
      for (int k = 0; k < d; ++k) {
        gw[k] += dz * c[k];
        dc[k] += dz * w[k];
      }
    }
    if (features[i].empty()) continue;
    const double inv = 1.0 / static_cast<double>(features[i].size());
    for (int32_t f : features[i]) {
      double *ge = grads->embeddings.row(f);
      for (int k = 0; k < d; ++k) ge[k] += dc[k] * inv;
    }
  }
  return loss * scale;
}

namespace {

bool AllFinite(const std::vector<double> &v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

size_t ArgMax(const std::vector<double> &p) {
  size_t best = 0;
  for (size_t r = 1; r < p.size(); ++r) {
    if (p[r] > p[best]) best = r;
  }
  return best;
}

double FeatureAccuracy(const Model &model, const std::vector<std::vector<int32_t>> &features,
                       const std::vector<int32_t> &rows) {
  if (rows.empty()) return 0.0;
  size_t correct = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (ArgMax(model.Probabilities(model.EncodeFeatures(features[i]))) ==
        static_cast<size_t>(rows[i])) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

}  // namespace

TrainResult Train(const std::vector<TrainingInstance> &train,
                  const std::vector<TrainingInstance> &dev, const TrainConfig &config) {
  config.Validate();
  if (train.empty()) throw Error(ErrorKind::kConfig, "training set is empty");
  std::set<std::string> train_labels;
  for (const auto &inst : train) train_labels.insert(inst.label);
  for (const auto &inst : dev) {
    if (!train_labels.count(inst.label)) {
      throw Error(ErrorKind::kConfig,
                  "dev label " + inst.label + " does not occur in the training set");
    }
  }

  TrainResult result;
  Model &model = result.model;
  model = Model(FeatureVocab::Build(train),
                std::vector<std::string>(train_labels.begin(), train_labels.end()),
                config.dim, config.seed);
  model.config() = config;

  auto featurize = [&](const std::vector<TrainingInstance> &set,
                       std::vector<std::vector<int32_t>> &features, std::vector<int32_t> &rows) {
    for (const auto &inst : set) {
      features.push_back(model.vocab().Encode(inst.tokens));
      rows.push_back(model.LabelRow(inst.label));
    }
  };
  std::vector<std::vector<int32_t>> train_x, dev_x;
  std::vector<int32_t> train_y, dev_y;
  featurize(train, train_x, train_y);
  featurize(dev, dev_x, dev_y);

  AdamState e_state(model.embeddings().data.size());
  AdamState w_state(model.weights().data.size());
  AdamState b_state(model.bias().size());
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);

  Model best = model;
  double best_acc = -1.0;
  int since_best = 0;
  int64_t step = 0;
  Gradients grads;
  std::vector<std::vector<int32_t>> bx;
  std::vector<int32_t> by;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    rng.Shuffle(order);
    double epoch_loss = 0.0;
    for (size_t begin = 0, batch_no = 0; begin < order.size();
         begin += static_cast<size_t>(config.batch_size), ++batch_no) {
      const size_t end = std::min(order.size(), begin + static_cast<size_t>(config.batch_size));
      bx.clear();
      by.clear();
      for (size_t i = begin; i < end; ++i) {
        bx.push_back(train_x[order[i]]);
        by.push_back(train_y[order[i]]);
      }
      const double loss = BatchLoss(model, bx, by, &grads);
      if (!std::isfinite(loss) || !AllFinite(grads.embeddings.data) ||
          !AllFinite(grads.weights.data) || !AllFinite(grads.bias)) {
        throw Error(ErrorKind::kTraining, "non-finite gradient in epoch " +
                                              std::to_string(epoch) + ", batch " +
                                              std::to_string(batch_no));
      }
      epoch_loss += loss * static_cast<double>(end - begin);
      ++step;
      AdamStep(model.embeddings().data, grads.embeddings.data, e_state, step, config);
      AdamStep(model.weights().data, grads.weights.data, w_state, step, config);
      AdamStep(model.bias(), grads.bias, b_state, step, config);
    }
    result.epoch_loss.push_back(epoch_loss / static_cast<double>(order.size()));
    result.epochs_run = epoch;
    if (dev.empty()) continue;
    const double acc = FeatureAccuracy(model, dev_x, dev_y);
    result.dev_accuracy.push_back(acc);
    if (acc > best_acc) {
      best_acc = acc;
      best = model;
      result.best_epoch = epoch;
      since_best = 0;
    } else if (++since_best >= config.patience) {
      break;
    }
  }
  if (!dev.empty()) {
    model = std::move(best);
  } else {
    result.best_epoch = result.epochs_run;
  }
  result.train_accuracy = FeatureAccuracy(model, train_x, train_y);
  return result;
}

double Accuracy(const Classifier &model, const std::vector<TrainingInstance> &instances) {
  if (instances.empty()) return 0.0;
  size_t correct = 0;
  for (const auto &inst : instances) {
    if (model.Predict(inst.tokens).label == inst.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(instances.size());
}

// Serialization: little-endian, fixed-width fields.
namespace {

constexpr char kMagic[8] = {'O', 'N', 'T', 'O', 'T', 'A', 'G', 'M'};
constexpr uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream &out) : out_(out) {}
  void U64(uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(b, 8);
  }
  void U32(uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(b, 4);
  }
  void I32(int32_t v) { U32(static_cast<uint32_t>(v)); }
  void F64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    U64(bits);
  }
  void Str(const std::string &s) {
    U32(static_cast<uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void F64s(const std::vector<double> &v) {
    for (double x : v) F64(x);
  }

 private:
  std::ostream &out_;
};

class Reader {
 public:
  explicit Reader(std::istream &in) : in_(in) {}
  void Bytes(char *dst, size_t n) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) {
      throw Error(ErrorKind::kValidation, "truncated model file");
    }
  }
  uint64_t U64() {
    unsigned char b[8];
    Bytes(reinterpret_cast<char *>(b), 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  uint32_t U32() {
    unsigned char b[4];
    Bytes(reinterpret_cast<char *>(b), 4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  int32_t I32() { return static_cast<int32_t>(U32()); }
  double F64() {
    uint64_t bits = U64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string Str() {
    uint32_t n = U32();
    if (n > (1u << 24)) throw Error(ErrorKind::kValidation, "corrupt model string length");
    std::string s(n, '\0');
    if (n) Bytes(s.data(), n);
    return s;
  }
  void F64s(std::vector<double> &v) {
    for (double &x : v) x = F64();
  }

 private:
  std::istream &in_;
};

}  // namespace

void Model::Save(std::ostream &out) const {
  out.write(kMagic, sizeof(kMagic));
  Writer w(out);
  w.U32(kVersion);
  w.F64(config_.learning_rate);
  w.I32(config_.batch_size);
  w.I32(config_.max_epochs);
  w.I32(config_.patience);
  w.F64(config_.adam_beta1);
  w.F64(config_.adam_beta2);
  w.F64(config_.adam_epsilon);
  w.I32(config_.dim);
  w.U64(config_.seed);
  w.I32(dim_);
  w.U64(vocab_.size());
  for (const auto &f : vocab_.features()) w.Str(f);
  w.U64(labels_.size());
  for (const auto &l : labels_) w.Str(l);
  w.F64s(embeddings_.data);
  w.F64s(weights_.data);
  w.F64s(bias_);
}

Model Model::Load(std::istream &in) {
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (in.gcount() != sizeof(magic) || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw Error(ErrorKind::kValidation, "not an ontotag model file (bad magic)");
  }
  Reader r(in);
  if (uint32_t version = r.U32(); version != kVersion) {
    throw Error(ErrorKind::kValidation,
                "unsupported model version " + std::to_string(version));
  }
  Model m;
  m.config_.learning_rate = r.F64();
  m.config_.batch_size = r.I32();
  m.config_.max_epochs = r.I32();
  m.config_.patience = r.I32();
  m.config_.adam_beta1 = r.F64();
  m.config_.adam_beta2 = r.F64();
  m.config_.adam_epsilon = r.F64();
  m.config_.dim = r.I32();
  m.config_.seed = r.U64();
  m.dim_ = r.I32();
  if (m.dim_ <= 0) throw Error(ErrorKind::kValidation, "corrupt model: non-positive width");
  const uint64_t nfeat = r.U64();
  if (nfeat > (1ull << 31)) throw Error(ErrorKind::kValidation, "corrupt model: vocab size");
  std::vector<std::string> features(nfeat);
  for (auto &f : features) f = r.Str();
  m.vocab_ = FeatureVocab(std::move(features));
  const uint64_t nlabels = r.U64();
  if (nlabels == 0 || nlabels > (1ull << 31)) {
    throw Error(ErrorKind::kValidation, "corrupt model: label count");
  }
  m.labels_.resize(nlabels);
  for (auto &l : m.labels_) l = r.Str();
  if (m.labels_[0] != kNoneLabel) throw Error(ErrorKind::kValidation, "corrupt model: NONE row");
  for (size_t i = 0; i < m.labels_.size(); ++i) {
    if (!m.label_rows_.emplace(m.labels_[i], static_cast<int32_t>(i)).second) {
      throw Error(ErrorKind::kValidation, "corrupt model: duplicate label " + m.labels_[i]);
    }
  }
  m.embeddings_ = Matrix(nfeat, m.dim_);
  m.weights_ = Matrix(nlabels, m.dim_);
  m.bias_.assign(nlabels, 0.0);
  r.F64s(m.embeddings_.data);
  r.F64s(m.weights_.data);
  r.F64s(m.bias_);
  return m;
}

void Model::SaveFile(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write model file " + path);
  Save(out);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

Model Model::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open model file " + path);
  return Load(in);
}

}  // namespace ontotag
