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

#include "oracles.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <tuple>

#include "ontotag/dataset.h"
#include "ontotag/random.h"

namespace ontotag::testing {
namespace {

std::set<std::string> Members(const std::string &label) {
  std::set<std::string> out;
  size_t i = 0;
  while (i <= label.size()) {
    size_t j = label.find(';', i);
    if (j == std::string::npos) j = label.size();
    if (j > i) out.insert(label.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

bool Intersects(const std::set<std::string> &a, const std::set<std::string> &b) {
  for (const auto &x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

// Token indices (or character positions without a tokenization) touched by
// a mention.
std::set<size_t> Cells(const Mention &m, const std::vector<TokenSpan> &tokens) {
  std::set<size_t> out;
  if (tokens.empty()) {
    for (size_t c = m.start; c < m.end; ++c) out.insert(c);
    return out;
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].start < m.end && m.start < tokens[i].end) out.insert(i);
  }
  return out;
}

size_t Common(const std::set<size_t> &a, const std::set<size_t> &b) {
  size_t n = 0;
  for (size_t x : a) n += b.count(x);
  return n;
}

double Harmonic(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

std::set<std::string> DocIds(const GoldSet &gold, const PredSet &pred) {
  std::set<std::string> ids;
  for (const auto &g : gold) ids.insert(g.first);
  for (const auto &p : pred) ids.insert(p.first);
  return ids;
}

Annotation Row(size_t start, size_t end, const char *text, const char *label, double score,
               Source source) {
  Annotation a;
  a.start = start;
  a.end = end;
  a.text = text;
  a.label = label;
  a.score = score;
  a.source = source;
  return a;
}

}  // namespace

OracleScores OracleMicro(const GoldSet &gold, const PredSet &pred) {
  OracleScores s;
  size_t tp = 0, fp = 0, fn = 0;
  for (const std::string &id : DocIds(gold, pred)) {
    std::vector<Mention> g, p;
    std::vector<TokenSpan> tokens;
    if (gold.count(id)) {
      g = *gold.at(id).mentions;
      tokens = gold.at(id).tokens;
    }
    if (pred.count(id)) p = pred.at(id);
    std::vector<bool> g_done(g.size()), p_done(p.size());
    OracleCounts c;
    while (true) {
      std::optional<std::tuple<size_t, size_t, size_t>> best;  // shared, gi, pi
      for (size_t gi = 0; gi < g.size(); ++gi) {
        if (g_done[gi]) continue;
        for (size_t pi = 0; pi < p.size(); ++pi) {
          if (p_done[pi] || !Intersects(Members(g[gi].label), Members(p[pi].label))) continue;
          const size_t shared = Common(Cells(g[gi], tokens), Cells(p[pi], tokens));
          if (shared == 0) continue;
          bool better = !best;
          if (best) {
            auto [bs, bg, bp] = *best;
            if (shared != bs) {
              better = shared > bs;
            } else {
              better = std::tie(g[gi].start, g[gi].end, g[gi].label, p[pi].start, p[pi].end,
                                p[pi].label) < std::tie(g[bg].start, g[bg].end, g[bg].label,
                                                        p[bp].start, p[bp].end, p[bp].label);
            }
          }
          if (better) best = std::make_tuple(shared, gi, pi);
        }
      }
      if (!best) break;
      g_done[std::get<1>(*best)] = true;
      p_done[std::get<2>(*best)] = true;
      ++c.tp;
    }
    c.fp = p.size() - c.tp;
    c.fn = g.size() - c.tp;
    tp += c.tp;
    fp += c.fp;
    fn += c.fn;
    s.per_doc[id] = c;
  }
  s.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  s.recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  s.f1 = Harmonic(s.precision, s.recall);
  return s;
}

OracleScores OracleMacro(const GoldSet &gold, const PredSet &pred) {
  OracleScores s;
  double p_total = 0.0, r_total = 0.0;
  const std::set<std::string> ids = DocIds(gold, pred);
  for (const std::string &id : ids) {
    std::set<std::string> g, p;
    if (gold.count(id)) {
      const DocGold &d = gold.at(id);
      for (const auto &l : d.labels) {
        for (const auto &m : Members(l)) g.insert(m);
      }
      if (d.mentions) {
        for (const auto &mention : *d.mentions) {
          for (const auto &m : Members(mention.label)) g.insert(m);
        }
      }
    }
    if (pred.count(id)) {
      for (const auto &mention : pred.at(id)) {
        for (const auto &m : Members(mention.label)) p.insert(m);
      }
    }
    OracleCounts c;
    for (const auto &x : p) c.tp += g.count(x);
    c.fp = p.size() - c.tp;
    c.fn = g.size() - c.tp;
    p_total += p.empty() ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(p.size());
    r_total += g.empty() ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(g.size());
    s.per_doc[id] = c;
  }
  if (!ids.empty()) {
    s.precision = p_total / static_cast<double>(ids.size());
    s.recall = r_total / static_cast<double>(ids.size());
  }
  s.f1 = Harmonic(s.precision, s.recall);
  return s;
}

std::vector<Annotation> OracleDictionaryTag(const Dictionary &dict, const Sentence &sentence,
                                            std::string_view text) {
  std::vector<Annotation> out;
  const auto &t = sentence.tokens;
  for (size_t i = 0; i < t.size(); ++i) {
    for (size_t j = i; j < t.size(); ++j) {
      std::string key;
      for (size_t k = i; k <= j; ++k) key += (k > i ? " " : "") + t[k].lower;
      if (const std::string *label = dict.Lookup(key)) {
        out.push_back(Row(t[i].start, t[j].end, "", label->c_str(), 1.0, Source::kDict));
        out.back().text = std::string(text.substr(t[i].start, t[j].end - t[i].start));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Annotation &a, const Annotation &b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  return out;
}

std::vector<Annotation> GoldenCombineDict() {
  const Source d = Source::kDict;
  return {
      Row(74, 106, "multiple congenital contractures", "HP:0002804", 1.0, d),
      Row(83, 106, "congenital contractures", "HP:0002803", 1.0, d),
      Row(94, 106, "contractures", "HP:0001371", 1.0, d),
      Row(428, 434, "twitch", "HP:0010546", 1.0, d),
      Row(1048, 1054, "twitch", "HP:0010546", 1.0, d),
      Row(1169, 1180, "contracture", "HP:0001371", 1.0, d),
  };
}

std::vector<Annotation> GoldenCombineMl() {
  const Source m = Source::kMl;
  return {
      Row(4, 25, "distal arthrogryposes", "HP:0005684", 0.999, m),
      Row(74, 106, "multiple congenital contractures", "HP:0002804", 0.999, m),
      Row(83, 106, "congenital contractures", "HP:0002803", 0.999, m),
      Row(428, 444, "twitch myofibers", "HP:0010546", 0.956, m),
      Row(1048, 1064, "twitch myofibers", "HP:0010546", 0.956, m),
      Row(1149, 1180, "multiple-congenital-contracture", "HP:0002804", 0.999, m),
      Row(1158, 1180, "congenital-contracture", "HP:0002803", 0.999, m),
  };
}

std::vector<Annotation> GoldenCombineOutput() {
  const Source d = Source::kDict, m = Source::kMl;
  return {
      Row(4, 25, "distal arthrogryposes", "HP:0005684", 0.999, m),
      Row(74, 106, "multiple congenital contractures", "HP:0002804", 1.0, d),
      Row(83, 106, "congenital contractures", "HP:0002803", 1.0, d),
      Row(94, 106, "contractures", "HP:0001371", 1.0, d),
      Row(428, 434, "twitch", "HP:0010546", 1.0, d),
      Row(1048, 1054, "twitch", "HP:0010546", 1.0, d),
      Row(1149, 1180, "multiple-congenital-contracture", "HP:0002804", 0.999, m),
      Row(1158, 1180, "congenital-contracture", "HP:0002803", 0.999, m),
      Row(1169, 1180, "contracture", "HP:0001371", 1.0, d),
  };
}

std::string CanonicalRows(std::vector<Annotation> anns) {
  std::sort(anns.begin(), anns.end(), AnnotationLess);
  std::string out;
  char score[32];
  for (const auto &a : anns) {
    std::snprintf(score, sizeof(score), "%.3f", a.score);
    out += std::to_string(a.start) + "\t" + std::to_string(a.end) + "\t" + a.text + "\t" +
           a.label + "\t" + score + "\n";
  }
  return out;
}

TrieFixture RandomTrieFixture(uint64_t seed) {
  static const char *kVocab[] = {"ear",   "anomaly", "short",  "stature", "of",
                                 "the",   "cleft",   "palate", "-",       "small"};
  constexpr size_t kWords = sizeof(kVocab) / sizeof(kVocab[0]);
  Rng rng(seed);
  DictEntries entries;
  const size_t n_entries = rng.Index(40);
  for (size_t e = 0; e < n_entries; ++e) {
    std::string text;
    const size_t len = 1 + rng.Index(4);
    for (size_t k = 0; k < len; ++k) text += std::string(k ? " " : "") + kVocab[rng.Index(kWords)];
    entries[text] = "L:" + std::to_string(rng.Index(5));
  }
  TrieFixture f{Dictionary(std::move(entries)), "", {}};
  const size_t len = rng.Index(30);
  for (size_t k = 0; k < len; ++k) {
    std::string w = kVocab[rng.Index(kWords)];
    if (rng.Index(4) == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    f.text += (k ? " " : "") + w;
  }
  f.sentence.end = f.text.size();
  f.sentence.tokens = Tokenize(f.text);
  PosTag(f.sentence.tokens);
  return f;
}

EvalFixture RandomEvalFixture(uint64_t seed, size_t max_docs, size_t max_mentions) {
  Rng rng(seed);
  EvalFixture f;
  const char *labels[] = {"L:1", "L:2", "L:3", "L:4", "L:5", "L:1;L:3", "L:2;L:4"};
  const size_t docs = 1 + rng.Index(max_docs);
  for (size_t d = 0; d < docs; ++d) {
    const std::string id = "d" + std::to_string(d);
    std::vector<TokenSpan> tokens;
    size_t pos = 0;
    const size_t n_tokens = 5 + rng.Index(30);
    for (size_t i = 0; i < n_tokens; ++i) {
      const size_t len = 1 + rng.Index(6);
      tokens.push_back({pos, pos + len});
      pos += len + 1;
    }
    auto mention = [&] {
      const size_t i = rng.Index(tokens.size());
      const size_t j = std::min(tokens.size() - 1, i + rng.Index(3));
      Mention m{tokens[i].start, tokens[j].end, labels[rng.Index(std::size(labels))]};
      // Occasionally start inside the first token.
      if (rng.Index(5) == 0 && m.end - m.start > 1) ++m.start;
      return m;
    };
    const uint64_t shape = rng.Index(10);
    if (shape != 0) {  // shape 0: document only in the predictions
      DocGold g;
      g.mentions.emplace();
      g.tokens = tokens;
      const size_t n = rng.Index(max_mentions + 1);
      for (size_t k = 0; k < n; ++k) g.mentions->push_back(mention());
      f.gold[id] = std::move(g);
    }
    if (shape != 1) {  // shape 1: document only in the gold
      std::vector<Mention> p;
      const size_t n = shape == 2 ? 0 : rng.Index(max_mentions + 1);
      for (size_t k = 0; k < n; ++k) {
        // Bias predictions toward gold spans so that matches are common.
        if (f.gold.count(id) && !f.gold[id].mentions->empty() && rng.Index(2) == 0) {
          const auto &gm = *f.gold[id].mentions;
          Mention m = gm[rng.Index(gm.size())];
          if (rng.Index(3) == 0) m.label = labels[rng.Index(std::size(labels))];
          p.push_back(m);
        } else {
          p.push_back(mention());
        }
      }
      f.pred[id] = std::move(p);
    }
  }
  return f;
}

std::string GoldenCombineText() {
  const std::pair<size_t, std::string_view> phrases[] = {
      {4, "distal arthrogryposes"},
      {74, "multiple congenital contractures"},
      {428, "twitch myofibers"},
      {1048, "twitch myofibers"},
      {1149, "multiple-congenital-contracture"},
  };
  // Filler is "x x x ...", with a space on both sides of every phrase.
  std::string text(1190, ' ');
  size_t gap = 0;
  auto fill = [&](size_t from, size_t to) {
    for (size_t i = from; i + 1 < to; i += 2) text[i] = 'x';
  };
  for (const auto &[start, phrase] : phrases) {
    fill(gap, start);
    text.replace(start, phrase.size(), phrase);
    gap = start + phrase.size() + 1;
  }
  fill(gap, text.size() - 1);
  text.back() = '.';
  return text;
}

Dictionary GoldenCombineDictionary() {
  DictEntries entries;
  for (const Annotation &a : GoldenCombineDict()) entries.emplace(Normalize(a.text), a.label);
  return Dictionary(std::move(entries));
}

Prediction TableClassifier::Predict(std::span<const std::string> tokens) const {
  std::string key;
  for (const auto &t : tokens) key += (key.empty() ? "" : " ") + t;
  if (auto it = table_.find(key); it != table_.end()) {
    return {1, it->second.first, it->second.second};
  }
  return {0, std::string(kNoneLabel), 0.999};
}

TableClassifier GoldenCombineClassifier() {
  TableClassifier::Table table;
  for (const Annotation &a : GoldenCombineMl()) {
    table[JoinTokens(NormalizedTokens(a.text))] = {a.label, a.score};
  }
  return TableClassifier(std::move(table));
}


}  // namespace ontotag::testing
