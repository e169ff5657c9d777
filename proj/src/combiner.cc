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

#include "ontotag/combiner.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace ontotag {
namespace {

bool IsAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || ((c | 0x20) >= 'a' && (c | 0x20) <= 'z');
}
bool IsWordByte(unsigned char c) { return IsAlnum(c) || c >= 0x80; }
bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
char Lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c; }

bool HasLetter(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return (c | 0x20) >= 'a' && (c | 0x20) <= 'z'; });
}
bool HasCapital(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return c >= 'A' && c <= 'Z'; });
}

size_t CountWords(std::string_view s, std::string_view delims) {
  size_t words = 0;
  bool in_word = false;
  for (char c : s) {
    const bool delim = delims.find(c) != std::string_view::npos;
    if (!delim && !in_word) ++words;
    in_word = !delim;
  }
  return words;
}

// [begin, end) of `s` with surrounding whitespace removed, relative to s.
std::pair<size_t, size_t> TrimRange(std::string_view s, size_t begin, size_t end) {
  while (begin < end && IsSpace(s[begin])) ++begin;
  while (end > begin && IsSpace(s[end - 1])) --end;
  return {begin, end};
}

bool ValidShortForm(std::string_view sf) {
  return sf.size() >= 2 && sf.size() <= 10 && CountWords(sf, " \t") <= 2 &&
         IsAlnum(sf.front()) && HasLetter(sf);
}

// Final acceptance checks on an aligned (short, long) pair.
bool AcceptPair(std::string_view sf, std::string_view lf) {
  size_t sf_size = 0;
  for (unsigned char c : sf) sf_size += IsAlnum(c) ? 1 : 0;
  const size_t lf_size = CountWords(lf, " \t\n\r\f-");
  if (lf.size() < sf.size()) return false;
  if (lf.find(std::string(sf) + " ") != std::string_view::npos) return false;
  if (lf.size() >= sf.size() && lf.substr(lf.size() - sf.size()) == sf) return false;
  return lf_size <= 2 * sf_size && lf_size <= sf_size + 5 && sf_size <= 10;
}

}  // namespace

bool Overlaps(const Annotation &a, const Annotation &b) {
  return a.start < b.end && b.start < a.end;
}

bool Dominates(const Annotation &a, const Annotation &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.source != b.source) return a.source == Source::kDict;
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.start != b.start) return a.start < b.start;
  return a.label < b.label;
}

std::vector<Annotation> Combine(const std::vector<Annotation> &dict_anns,
                                const std::vector<Annotation> &ml_anns) {
  std::vector<Annotation> all = dict_anns;
  all.insert(all.end(), ml_anns.begin(), ml_anns.end());
  auto key = [](const Annotation &a) {
    return std::tie(a.start, a.end, a.label, a.score, a.source);
  };
  std::sort(all.begin(), all.end(),
            [&](const Annotation &a, const Annotation &b) { return key(a) < key(b); });
  all.erase(std::unique(all.begin(), all.end(),
                        [&](const Annotation &a, const Annotation &b) { return key(a) == key(b); }),
            all.end());

  // Sorted by start, so for i < j the pair overlaps iff all[j].start < all[i].end.
  std::vector<bool> dropped(all.size(), false);
  auto resolve = [&](auto &&applies) {
    std::vector<bool> next = dropped;
    for (size_t i = 0; i < all.size(); ++i) {
      if (dropped[i]) continue;
      for (size_t j = i + 1; j < all.size() && all[j].start < all[i].end; ++j) {
        if (dropped[j] || !applies(all[i], all[j])) continue;
        next[Dominates(all[i], all[j]) ? j : i] = true;
      }
    }
    dropped = std::move(next);
  };
  // Rule 2: same label.
  resolve([](const Annotation &a, const Annotation &b) { return a.label == b.label; });
  // Rule 3: same span, different labels.
  resolve([](const Annotation &a, const Annotation &b) {
    return a.start == b.start && a.end == b.end && a.label != b.label;
  });

  std::vector<Annotation> out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (!dropped[i]) out.push_back(std::move(all[i]));
  }
  std::sort(out.begin(), out.end(), AnnotationLess);
  return out;
}

size_t FindBestLongForm(std::string_view sf, std::string_view lf) {
  long l = static_cast<long>(lf.size()) - 1;
  for (long s = static_cast<long>(sf.size()) - 1; s >= 0; --s) {
    const char c = Lower(sf[s]);
    if (!IsAlnum(c)) continue;
    while ((l >= 0 && Lower(lf[l]) != c) || (s == 0 && l > 0 && IsAlnum(lf[l - 1]))) --l;
    if (l < 0) return std::string_view::npos;
    --l;
  }
  if (l < 0) return 0;
  size_t space = lf.rfind(' ', static_cast<size_t>(l));
  return space == std::string_view::npos ? 0 : space + 1;
}

std::vector<AbbrevPair> ExtractAbbrevPairs(std::string_view text,
                                           const std::vector<Sentence> &sentences) {
  std::vector<AbbrevPair> pairs;
  for (const Sentence &sentence : sentences) {
    const std::string_view sent = text.substr(sentence.start, sentence.end - sentence.start);
    const size_t base = sentence.start;
    size_t pos = 0;
    while (true) {
      const size_t space_paren = sent.find(" (", pos);
      if (space_paren == std::string_view::npos) break;
      const size_t open = space_paren + 1;
      size_t close = std::string_view::npos;
      int depth = 0;
      for (size_t k = open; k < sent.size(); ++k) {
        if (sent[k] == '(') ++depth;
        if (sent[k] == ')' && --depth == 0) {
          close = k;
          break;
        }
      }
      if (close == std::string_view::npos) break;
      pos = close + 1;

      // Inner text, cut at a nested parenthesis or a ", " / "; " clause.
      size_t inner_end = close;
      for (std::string_view stop : {std::string_view("("), std::string_view(", "),
                                    std::string_view("; ")}) {
        size_t k = sent.find(stop, open + 1);
        if (k != std::string_view::npos && k < inner_end) inner_end = k;
      }
      auto [in_b, in_e] = TrimRange(sent, open + 1, inner_end);
      if (in_b >= in_e) continue;
      auto [lc_b, lc_e] = TrimRange(sent, 0, space_paren);
      if (lc_b >= lc_e) continue;

      TextSpan sf, lf;
      const std::string_view inner = sent.substr(in_b, in_e - in_b);
      if (CountWords(inner, " \t") > 2 || inner.size() > lc_e - lc_b) {
        // "SF (long form)": the short form is the word before the parenthesis.
        size_t w = sent.rfind(' ', lc_e - 1);
        w = (w == std::string_view::npos || w < lc_b) ? lc_b : w + 1;
        const std::string_view word = sent.substr(w, lc_e - w);
        if (!HasCapital(word) || !ValidShortForm(word)) continue;
        const size_t off = FindBestLongForm(word, inner);
        if (off == std::string_view::npos) continue;
        sf = {std::string(word), base + w, base + lc_e};
        lf = {std::string(inner.substr(off)), base + in_b + off, base + in_e};
      } else {
        if (!ValidShortForm(inner)) continue;
        // Long-form window: the last min(|SF| + 5, 2|SF|) words.
        const size_t max_words = std::min(inner.size() + 5, 2 * inner.size());
        size_t win_b = lc_e;
        size_t words = 0;
        while (win_b > lc_b) {
          size_t k = win_b;
          while (k > lc_b && IsSpace(sent[k - 1])) --k;
          size_t w = k;
          while (w > lc_b && !IsSpace(sent[w - 1])) --w;
          if (w == k || words == max_words) break;
          ++words;
          win_b = w;
        }
        const std::string_view window = sent.substr(win_b, lc_e - win_b);
        const size_t off = FindBestLongForm(inner, window);
        if (off == std::string_view::npos) continue;
        sf = {std::string(inner), base + in_b, base + in_e};
        lf = {std::string(window.substr(off)), base + win_b + off, base + lc_e};
      }
      if (!AcceptPair(sf.text, lf.text)) continue;
      pairs.push_back(AbbrevPair{std::move(sf), std::move(lf)});
    }
  }
  return pairs;
}

std::vector<Annotation> PropagateAbbrevs(const std::vector<Annotation> &anns,
                                         const std::vector<AbbrevPair> &pairs,
                                         std::string_view text) {
  std::vector<Annotation> out = anns;
  std::set<std::tuple<size_t, size_t, std::string>> present;
  for (const auto &a : anns) present.emplace(a.start, a.end, a.label);
  for (const AbbrevPair &pair : pairs) {
    // Every label tagged on the long form propagates; per label, the
    // strongest covering annotation supplies score and source.
    std::vector<const Annotation *> covering;
    for (const Annotation &a : anns) {
      if (a.start <= pair.long_form.start && a.end >= pair.long_form.end) covering.push_back(&a);
    }
    std::sort(covering.begin(), covering.end(),
              [](const Annotation *a, const Annotation *b) { return Dominates(*a, *b); });
    const std::string &sf = pair.short_form.text;
    for (const Annotation *source : covering) {
      for (size_t k = text.find(sf); k != std::string_view::npos; k = text.find(sf, k + 1)) {
        const size_t end = k + sf.size();
        if (k > 0 && IsWordByte(text[k - 1])) continue;
        if (end < text.size() && IsWordByte(text[end])) continue;
        if (!present.emplace(k, end, source->label).second) continue;
        Annotation a;
        a.start = k;
        a.end = end;
        a.text = sf;
        a.label = source->label;
        a.score = source->score;
        a.source = source->source;
        out.push_back(std::move(a));
      }
    }
  }
  std::sort(out.begin(), out.end(), AnnotationLess);
  return out;
}

}  // namespace ontotag
