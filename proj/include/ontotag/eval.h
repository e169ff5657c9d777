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

// Document-level macro and mention-level micro precision / recall / F1.
//
//   P_macro = mean_d TP_d / (TP_d + FP_d)     (1.0 for a document with no
//   R_macro = mean_d TP_d / (TP_d + FN_d)      predictions / no gold labels)
//   P_micro = sum TP / (sum TP + sum FP)
//   R_micro = sum TP / (sum TP + sum FN)
//   F1 = 2 P R / (P + R), or 0 when P + R = 0.
//
// Mentions match when their label sets intersect (composite "A;B" labels are
// expanded) and their spans share at least one token.

#ifndef ONTOTAG_EVAL_H_
#define ONTOTAG_EVAL_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontotag/annotation.h"

namespace ontotag {

struct Mention {
  size_t start = 0;
  size_t end = 0;
  std::string label;
};

struct TokenSpan {
  size_t start = 0;
  size_t end = 0;
};

struct DocGold {
  // Absent for document-level-only gold.
  std::optional<std::vector<Mention>> mentions;
  std::set<std::string> labels;
  // Document tokenization used for relaxed span matching. When empty,
  // spans match on any shared character.
  std::vector<TokenSpan> tokens;
};

using GoldSet = std::map<std::string, DocGold>;
using PredSet = std::map<std::string, std::vector<Mention>>;

struct DocCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Set when a denominator was zero and the value was reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

struct EvalReport {
  std::map<std::string, DocCounts> per_doc;
  Prf scores;
  size_t documents = 0;
};

double F1(double precision, double recall);

// Label-set intersection after composite expansion.
bool LabelsMatch(const std::string &a, const std::string &b);

// Number of document tokens shared by the two spans (shared characters when
// `tokens` is empty).
size_t SharedTokens(const Mention &a, const Mention &b, const std::vector<TokenSpan> &tokens);

bool MatchRelaxed(const Mention &gold, const Mention &pred,
                  const std::vector<TokenSpan> &tokens);

// Documents are the union of gold and prediction document IDs. Throws
// Error(kUsage) when any gold document lacks mention-level annotation.
EvalReport MentionMicro(const GoldSet &gold, const PredSet &pred);

EvalReport DocMacro(const GoldSet &gold, const PredSet &pred);

// Member IDs of every label.
std::set<std::string> ExpandLabels(const std::vector<Mention> &mentions);
std::set<std::string> ExpandLabels(const std::set<std::string> &labels);

std::vector<Mention> ToMentions(const std::vector<Annotation> &anns);

}  // namespace ontotag

#endif  // ONTOTAG_EVAL_H_
