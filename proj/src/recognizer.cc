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

#include "ontotag/recognizer.h"

#include <algorithm>
#include <string>

#include "ontotag/error.h"

namespace ontotag {
namespace {

bool Blocks(Pos pos) {
  return pos == Pos::kPunct || pos == Pos::kPrep || pos == Pos::kConj || pos == Pos::kDet;
}

}  // namespace

void RecognizerConfig::Validate() const {
  if (min_n < 1 || min_n > max_n) {
    throw Error(ErrorKind::kConfig, "n-gram range must satisfy 1 <= min_n <= max_n");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorKind::kConfig, "threshold must lie in (0, 1)");
  }
}

bool PosFilter(std::span<const Token> tokens) {
  if (tokens.empty()) return false;
  return !Blocks(tokens.front().pos) && !Blocks(tokens.back().pos);
}

std::vector<Candidate> GenerateCandidates(const Sentence &sentence,
                                          const RecognizerConfig &config) {
  std::vector<Candidate> out;
  const std::span<const Token> tokens(sentence.tokens);
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (size_t n = config.min_n; n <= config.max_n && i + n <= tokens.size(); ++n) {
      Candidate c{tokens.subspan(i, n), tokens[i].start, tokens[i + n - 1].end};
      if (PosFilter(c)) out.push_back(c);
    }
  }
  return out;
}

std::vector<Annotation> TagMl(const Classifier &classifier, const Sentence &sentence,
                              std::string_view text, const RecognizerConfig &config) {
  std::vector<Annotation> out;
  std::vector<std::string> lowered;
  for (const Candidate &c : GenerateCandidates(sentence, config)) {
    lowered.clear();
    for (const Token &t : c.tokens) lowered.push_back(t.lower);
    Prediction p = classifier.Predict(lowered);
    if (p.label == kNoneLabel || !(p.score > config.threshold)) continue;
    Annotation a;
    a.start = c.start;
    a.end = c.end;
    a.text = std::string(text.substr(c.start, c.end - c.start));
    a.label = std::move(p.label);
    a.score = p.score;
    a.source = Source::kMl;
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), AnnotationLess);
  return out;
}

}  // namespace ontotag
