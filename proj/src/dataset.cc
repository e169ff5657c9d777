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

#include "ontotag/dataset.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ontotag/error.h"
#include "ontotag/random.h"
#include "ontotag/recognizer.h"
#include "ontotag/textproc.h"

namespace ontotag {

Positives GeneratePositives(const Dictionary &dictionary, size_t max_tokens) {
  Positives out;
  for (const auto &[text, label] : dictionary.entries()) {
    std::vector<std::string> tokens = NormalizedTokens(text);
    if (tokens.size() > max_tokens) {
      ++out.skipped_overlong;
      continue;
    }
    out.instances.push_back(TrainingInstance{std::move(tokens), label});
  }
  return out;
}

std::vector<TrainingInstance> SampleNegatives(const std::vector<std::string> &corpus,
                                              const Dictionary &dictionary,
                                              const DatasetSpec &spec) {
  std::vector<TrainingInstance> out;
  if (spec.negative_count == 0) return out;
  if (spec.max_ngram < 1) throw Error(ErrorKind::kConfig, "max_ngram must be >= 1");
  if (corpus.empty()) throw Error(ErrorKind::kSampling, "negative sampling needs a corpus");

  std::vector<std::vector<Sentence>> docs;
  docs.reserve(corpus.size());
  for (const auto &text : corpus) {
    std::vector<Sentence> sentences = AnalyzeDocument(text);
    std::erase_if(sentences, [](const Sentence &s) { return s.tokens.empty(); });
    docs.push_back(std::move(sentences));
  }

  Rng rng(spec.seed);
  const size_t max_draws = 100 * spec.negative_count;
  size_t draws = 0;
  std::vector<std::string> tokens;
  while (out.size() < spec.negative_count && draws < max_draws) {
    ++draws;
    const auto &doc = docs[rng.Index(docs.size())];
    if (doc.empty()) continue;
    const auto &sentence = doc[rng.Index(doc.size())];
    const size_t len = sentence.tokens.size();
    const size_t n = std::min<size_t>(1 + rng.Index(spec.max_ngram), len);
    const size_t start = rng.Index(len - n + 1);
    std::span<const Token> window(sentence.tokens.data() + start, n);
    if (!PosFilter(window)) continue;
    tokens.clear();
    for (const Token &t : window) tokens.push_back(t.lower);
    if (dictionary.Contains(JoinTokens(tokens)) ||
        dictionary.Contains(JoinTokens(LemmatizeTokens(tokens)))) {
      continue;
    }
    out.push_back(TrainingInstance{tokens, std::string(kNoneLabel)});
  }
  if (out.size() < spec.negative_count) {
    throw Error(ErrorKind::kSampling,
                "negative sampling gave up after " + std::to_string(draws) + " draws with " +
                    std::to_string(out.size()) + " of " +
                    std::to_string(spec.negative_count) + " negatives");
  }
  return out;
}

Split Assemble(const std::vector<TrainingInstance> &positives,
               const std::vector<TrainingInstance> &negatives, const DatasetSpec &spec) {
  if (!(spec.dev_fraction >= 0.0 && spec.dev_fraction < 1.0)) {
    throw Error(ErrorKind::kConfig, "dev fraction must lie in [0, 1)");
  }
  std::vector<TrainingInstance> all = positives;
  all.insert(all.end(), negatives.begin(), negatives.end());
  Rng rng(spec.seed);
  rng.Shuffle(all);

  const auto dev_target = static_cast<size_t>(
      std::floor(static_cast<double>(all.size()) * spec.dev_fraction + 1e-9));
  std::map<std::string, size_t> remaining;
  for (const auto &inst : all) ++remaining[inst.label];

  std::vector<bool> in_dev(all.size(), false);
  size_t dev_size = 0;
  auto take = [&](size_t i) {
    in_dev[i] = true;
    --remaining[all[i].label];
    ++dev_size;
  };
  if (dev_target > 0 && negatives.size() >= 2) {
    for (size_t i = 0; i < all.size(); ++i) {
      if (all[i].label == kNoneLabel) {
        take(i);
        break;
      }
    }
  }
  for (size_t i = 0; i < all.size() && dev_size < dev_target; ++i) {
    if (!in_dev[i] && remaining[all[i].label] >= 2) take(i);
  }

  Split split;
  for (size_t i = 0; i < all.size(); ++i) {
    (in_dev[i] ? split.dev : split.train).push_back(std::move(all[i]));
  }
  return split;
}

void WriteDataset(const std::vector<TrainingInstance> &instances, std::ostream &out) {
  for (const auto &inst : instances) out << inst.label << '\t' << JoinTokens(inst.tokens) << '\n';
}

std::vector<TrainingInstance> ReadDataset(std::istream &in) {
  std::vector<TrainingInstance> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(ErrorKind::kValidation,
                  "dataset line " + std::to_string(line_no) + ": expected 'label<TAB>tokens'");
    }
    TrainingInstance inst{SplitSpaces(std::string_view(line).substr(tab + 1)),
                          line.substr(0, tab)};
    if (inst.tokens.empty()) {
      throw Error(ErrorKind::kValidation,
                  "dataset line " + std::to_string(line_no) + ": no tokens");
    }
    out.push_back(std::move(inst));
  }
  return out;
}

void SaveDataset(const std::vector<TrainingInstance> &instances, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write dataset file " + path);
  WriteDataset(instances, out);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

std::vector<TrainingInstance> LoadDataset(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open dataset file " + path);
  return ReadDataset(in);
}

std::vector<std::string> LoadCorpus(const std::string &path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  std::vector<std::string> docs;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(path, ec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
      std::ifstream in(f, std::ios::binary);
      if (!in) throw Error(ErrorKind::kIo, "cannot read corpus file " + f.string());
      std::ostringstream ss;
      ss << in.rdbuf();
      docs.push_back(ss.str());
    }
    return docs;
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open corpus " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) docs.push_back(line);
  }
  return docs;
}

}  // namespace ontotag
