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

#include "ontotag/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "ontotag/combiner.h"
#include "ontotag/error.h"
#include "ontotag/textproc.h"

namespace ontotag {

void TaggerOptions::Validate() const {
  if (!use_dict && !use_ml) {
    throw Error(ErrorKind::kConfig, "dictionary and classifier cannot both be disabled");
  }
  recognizer.Validate();
}

Tagger::Tagger(const TokenTrie *trie, const Classifier *classifier, TaggerOptions options)
    : trie_(trie), classifier_(classifier), options_(options) {
  options_.Validate();
  if (options_.use_dict && trie_ == nullptr) {
    throw Error(ErrorKind::kConfig, "dictionary matching enabled without a dictionary");
  }
  if (options_.use_ml && classifier_ == nullptr) {
    throw Error(ErrorKind::kConfig, "classification enabled without a model");
  }
}

std::vector<Annotation> Tagger::Tag(std::string_view text) const {
  const std::vector<Sentence> sentences = AnalyzeDocument(text);
  std::vector<Annotation> dict_anns, ml_anns;
  for (const Sentence &s : sentences) {
    if (options_.use_dict) {
      auto found = TagDictionary(*trie_, s, text);
      dict_anns.insert(dict_anns.end(), found.begin(), found.end());
    }
    if (options_.use_ml) {
      auto found = TagMl(*classifier_, s, text, options_.recognizer);
      ml_anns.insert(ml_anns.end(), found.begin(), found.end());
    }
  }
  std::vector<Annotation> combined = Combine(dict_anns, ml_anns);
  return PropagateAbbrevs(combined, ExtractAbbrevPairs(text, sentences), text);
}

std::vector<TagOutcome> TagDocuments(const Tagger &tagger, const std::vector<PubtatorDoc> &docs,
                                     size_t threads) {
  std::vector<TagOutcome> out(docs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < docs.size(); i = next++) {
      TagOutcome &o = out[i];
      o.doc = docs[i];
      try {
        o.doc.annotations = tagger.Tag(o.doc.text());
      } catch (const std::exception &e) {
        o.doc.annotations.clear();
        o.error = e.what();
      }
    }
  };
  const size_t n = std::max<size_t>(1, std::min(threads, docs.size()));
  if (n == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto &t : pool) t.join();
  return out;
}

size_t DefaultThreads() {
  if (const char *env = std::getenv("ONTOTAG_THREADS"); env != nullptr && *env != '\0') {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace ontotag
