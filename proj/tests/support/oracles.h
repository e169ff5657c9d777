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

// Brute-force reference implementations and frozen golden data shared by the
// unit tests and the acceptance suite. Written independently of the library
// code they check.

#ifndef ONTOTAG_TESTS_SUPPORT_ORACLES_H_
#define ONTOTAG_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/eval.h"
#include "ontotag/model.h"
#include "ontotag/ontology.h"
#include "ontotag/textproc.h"

namespace ontotag::testing {

struct OracleCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
};

struct OracleScores {
  std::map<std::string, OracleCounts> per_doc;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Mention-level micro scores by repeated full rescans for the best remaining
// (gold, pred) pair.
OracleScores OracleMicro(const GoldSet &gold, const PredSet &pred);

// Document-level macro scores.
OracleScores OracleMacro(const GoldSet &gold, const PredSet &pred);

// Every token window of the sentence looked up in the entry map.
std::vector<Annotation> OracleDictionaryTag(const Dictionary &dict, const Sentence &sentence,
                                            std::string_view text);

// The worked combination example: 13 tagger rows in, 9 rows out.
std::vector<Annotation> GoldenCombineDict();
std::vector<Annotation> GoldenCombineMl();
std::vector<Annotation> GoldenCombineOutput();

// "start\tend\ttext\tlabel\tscore(3 dp)" lines in canonical order.
std::string CanonicalRows(std::vector<Annotation> anns);

// Randomized evaluation fixture: up to `max_docs` documents of synthetic
// tokens with up to `max_mentions` gold and predicted mentions each.
// A document whose dictionary and classifier output reproduce the golden
// combine example under the default threshold.
std::string GoldenCombineText();
Dictionary GoldenCombineDictionary();

// Predictions from a table keyed by space-joined lowercase tokens; anything
// else is NONE with high confidence.
class TableClassifier : public Classifier {
 public:
  using Table = std::map<std::string, std::pair<std::string, double>>;
  explicit TableClassifier(Table table) : table_(std::move(table)) {}
  Prediction Predict(std::span<const std::string> tokens) const override;

 private:
  Table table_;
};
TableClassifier GoldenCombineClassifier();

// A random dictionary over a small vocabulary and a sentence drawn from the
// same words, with random capitalization.
struct TrieFixture {
  Dictionary dict;
  std::string text;
  Sentence sentence;
};
TrieFixture RandomTrieFixture(uint64_t seed);

struct EvalFixture {
  GoldSet gold;
  PredSet pred;
};
EvalFixture RandomEvalFixture(uint64_t seed, size_t max_docs, size_t max_mentions);

}  // namespace ontotag::testing

#endif  // ONTOTAG_TESTS_SUPPORT_ORACLES_H_
