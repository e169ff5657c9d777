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

#ifndef ONTOTAG_RECOGNIZER_H_
#define ONTOTAG_RECOGNIZER_H_

#include <span>
#include <string_view>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/model.h"
#include "ontotag/textproc.h"

namespace ontotag {

struct RecognizerConfig {
  size_t min_n = 2;
  size_t max_n = 10;
  double threshold = 0.95;

  void Validate() const;
};

struct Candidate {
  std::span<const Token> tokens;
  size_t start = 0;
  size_t end = 0;
};

// False iff the first or last token is punctuation, a preposition, a
// conjunction or a determiner.
bool PosFilter(std::span<const Token> tokens);
inline bool PosFilter(const Candidate &c) { return PosFilter(c.tokens); }

// All windows of min_n..max_n tokens that pass PosFilter, ordered by start
// token then length.
std::vector<Candidate> GenerateCandidates(const Sentence &sentence,
                                          const RecognizerConfig &config);

// Classifies each candidate; keeps non-NONE predictions with score > T.
std::vector<Annotation> TagMl(const Classifier &classifier, const Sentence &sentence,
                              std::string_view text, const RecognizerConfig &config);

}  // namespace ontotag

#endif  // ONTOTAG_RECOGNIZER_H_
