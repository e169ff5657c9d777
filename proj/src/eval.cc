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

#include "ontotag/eval.h"

#include <algorithm>
#include <tuple>

#include "ontotag/error.h"
#include "ontotag/ontology.h"

namespace ontotag {
namespace {

std::set<std::string> DocumentIds(const GoldSet &gold, const PredSet &pred) {
  std::set<std::string> ids;
  for (const auto &[id, g] : gold) ids.insert(id);
  for (const auto &[id, p] : pred) ids.insert(id);
  return ids;
}

double Ratio(size_t num, size_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double F1(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

bool LabelsMatch(const std::string &a, const std::string &b) {
  if (a == b) return true;
  if (a.find(';') == std::string::npos && b.find(';') == std::string::npos) return false;
  std::vector<std::string> x = SplitLabel(a), y = SplitLabel(b);
  for (const auto &id : x) {
    if (std::find(y.begin(), y.end(), id) != y.end()) return true;
  }
  return false;
}

size_t SharedTokens(const Mention &a, const Mention &b, const std::vector<TokenSpan> &tokens) {
  const size_t lo = std::max(a.start, b.start);
  const size_t hi = std::min(a.end, b.end);
  if (lo >= hi && tokens.empty()) return 0;
  if (tokens.empty()) return hi - lo;
  size_t shared = 0;
  for (const TokenSpan &t : tokens) {
    if (t.start >= hi) break;
    if (t.end > lo) ++shared;
  }
  return shared;
}

bool MatchRelaxed(const Mention &gold, const Mention &pred,
                  const std::vector<TokenSpan> &tokens) {
  return LabelsMatch(gold.label, pred.label) && SharedTokens(gold, pred, tokens) > 0;
}

std::set<std::string> ExpandLabels(const std::set<std::string> &labels) {
  std::set<std::string> out;
  for (const auto &l : labels) {
    for (auto &id : SplitLabel(l)) out.insert(std::move(id));
  }
  return out;
}

std::set<std::string> ExpandLabels(const std::vector<Mention> &mentions) {
  std::set<std::string> out;
  for (const auto &m : mentions) {
    for (auto &id : SplitLabel(m.label)) out.insert(std::move(id));
  }
  return out;
}

std::vector<Mention> ToMentions(const std::vector<Annotation> &anns) {
  std::vector<Mention> out;
  out.reserve(anns.size());
  for (const auto &a : anns) out.push_back(Mention{a.start, a.end, a.label});
  return out;
}

EvalReport MentionMicro(const GoldSet &gold, const PredSet &pred) {
  static const std::vector<Mention> kEmpty;
  static const std::vector<TokenSpan> kNoTokens;
  EvalReport report;
  size_t tp = 0, fp = 0, fn = 0;
  for (const std::string &id : DocumentIds(gold, pred)) {
    const std::vector<Mention> *golds = &kEmpty;
    const std::vector<TokenSpan> *tokens = &kNoTokens;
    if (auto it = gold.find(id); it != gold.end()) {
      if (!it->second.mentions) {
        throw Error(ErrorKind::kUsage,
                    "document " + id + " has only document-level gold; "
                    "mention-level metrics need span annotations");
      }
      golds = &*it->second.mentions;
      tokens = &it->second.tokens;
    }
    const std::vector<Mention> *preds = &kEmpty;
    if (auto it = pred.find(id); it != pred.end()) preds = &it->second;

    // Candidate pairs, best overlap first; ties broken on content so the
    // result does not depend on input order.
    struct Pair {
      size_t shared;
      size_t g;
      size_t p;
    };
    std::vector<Pair> pairs;
    for (size_t g = 0; g < golds->size(); ++g) {
      for (size_t p = 0; p < preds->size(); ++p) {
        if (!LabelsMatch((*golds)[g].label, (*preds)[p].label)) continue;
        size_t shared = SharedTokens((*golds)[g], (*preds)[p], *tokens);
        if (shared > 0) pairs.push_back({shared, g, p});
      }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const Pair &a, const Pair &b) {
      if (a.shared != b.shared) return a.shared > b.shared;
      const Mention &ga = (*golds)[a.g], &pa = (*preds)[a.p];
      const Mention &gb = (*golds)[b.g], &pb = (*preds)[b.p];
      return std::tie(ga.start, ga.end, ga.label, pa.start, pa.end, pa.label) <
             std::tie(gb.start, gb.end, gb.label, pb.start, pb.end, pb.label);
    });
    std::vector<bool> gold_used(golds->size()), pred_used(preds->size());
    DocCounts counts;
    for (const Pair &x : pairs) {
      if (gold_used[x.g] || pred_used[x.p]) continue;
      gold_used[x.g] = pred_used[x.p] = true;
      ++counts.tp;
    }
    counts.fp = preds->size() - counts.tp;
    counts.fn = golds->size() - counts.tp;
    tp += counts.tp;
    fp += counts.fp;
    fn += counts.fn;
    report.per_doc[id] = counts;
  }
  report.documents = report.per_doc.size();
  Prf &s = report.scores;
  if (tp + fp > 0) {
    s.precision = Ratio(tp, tp + fp);
  } else {
    s.precision_undefined = true;
  }
  if (tp + fn > 0) {
    s.recall = Ratio(tp, tp + fn);
  } else {
    s.recall_undefined = true;
  }
  s.f1 = F1(s.precision, s.recall);
  return report;
}

EvalReport DocMacro(const GoldSet &gold, const PredSet &pred) {
  EvalReport report;
  double p_sum = 0.0, r_sum = 0.0;
  for (const std::string &id : DocumentIds(gold, pred)) {
    std::set<std::string> g, p;
    if (auto it = gold.find(id); it != gold.end()) {
      g = ExpandLabels(it->second.labels);
      if (it->second.mentions) {
        for (auto &l : ExpandLabels(*it->second.mentions)) g.insert(std::move(l));
      }
    }
    if (auto it = pred.find(id); it != pred.end()) p = ExpandLabels(it->second);
    DocCounts counts;
    for (const auto &l : p) counts.tp += g.count(l);
    counts.fp = p.size() - counts.tp;
    counts.fn = g.size() - counts.tp;
    p_sum += p.empty() ? 1.0 : Ratio(counts.tp, counts.tp + counts.fp);
    r_sum += g.empty() ? 1.0 : Ratio(counts.tp, counts.tp + counts.fn);
    report.per_doc[id] = counts;
  }
  report.documents = report.per_doc.size();
  Prf &s = report.scores;
  if (report.documents == 0) {
    s.precision_undefined = s.recall_undefined = true;
    return report;
  }
  s.precision = p_sum / static_cast<double>(report.documents);
  s.recall = r_sum / static_cast<double>(report.documents);
  s.f1 = F1(s.precision, s.recall);
  return report;
}

}  // namespace ontotag
