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

// End-to-end tagging of documents: dictionary matching and n-gram
// classification per sentence, overlap resolution, then abbreviation
// propagation.

#ifndef ONTOTAG_PIPELINE_H_
#define ONTOTAG_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/matcher.h"
#include "ontotag/model.h"
#include "ontotag/pubtator.h"
#include "ontotag/recognizer.h"

namespace ontotag {

struct TaggerOptions {
  RecognizerConfig recognizer;
  bool use_dict = true;
  bool use_ml = true;

  // Throws Error(kConfig) when both components are disabled.
  void Validate() const;
};

// Holds non-owning pointers; the trie and classifier must outlive it. Either
// may be null when the matching component is disabled.
class Tagger {
 public:
  Tagger(const TokenTrie *trie, const Classifier *classifier, TaggerOptions options);

  std::vector<Annotation> Tag(std::string_view text) const;

  const TaggerOptions &options() const { return options_; }

 private:
  const TokenTrie *trie_;
  const Classifier *classifier_;
  TaggerOptions options_;
};

struct TagOutcome {
  PubtatorDoc doc;     // input document with annotations replaced
  std::string error;   // non-empty if tagging this document failed
};

// Tags every document on up to `threads` workers. Results are in input order.
std::vector<TagOutcome> TagDocuments(const Tagger &tagger, const std::vector<PubtatorDoc> &docs,
                                     size_t threads);

// Worker count from ONTOTAG_THREADS, else the hardware concurrency (min 1).
size_t DefaultThreads();

}  // namespace ontotag

#endif  // ONTOTAG_PIPELINE_H_
