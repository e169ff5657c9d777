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

#include "ontotag/textproc.h"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

namespace ontotag {
namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsPunct(unsigned char c) {
  return c < 0x80 && ((c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
                      (c >= '[' && c <= '`') || (c >= '{' && c <= '~'));
}

bool IsUpper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }
bool IsAlpha(unsigned char c) { return (c | 0x20) >= 'a' && (c | 0x20) <= 'z'; }

// Words ending in '.' that do not end a sentence.
constexpr std::array<std::string_view, 27> kGuardWords = {
    "e.g.", "i.e.", "dr.", "vs.", "cf.", "fig.", "figs.", "al.", "mr.",
    "mrs.", "ms.", "no.", "nos.", "approx.", "ca.", "prof.", "st.", "jr.",
    "sr.", "viz.", "resp.", "eq.", "ref.", "vol.", "pp.", "ed.", "v."};

bool IsGuarded(std::string_view text, size_t dot) {
  size_t b = dot;
  while (b > 0 && !IsSpace(text[b - 1])) --b;
  while (b < dot && !(IsAlpha(text[b]) || IsDigit(text[b]))) ++b;
  std::string word = ToLower(text.substr(b, dot + 1 - b));
  if (std::find(kGuardWords.begin(), kGuardWords.end(), word) != kGuardWords.end()) {
    return true;
  }
  // Initials such as "J. Smith".
  return dot - b == 1 && IsUpper(text[b]);
}

void SplitChunk(std::string_view text, size_t a, size_t b, size_t base,
                std::vector<Token> &out) {
  auto emit = [&](size_t s, size_t e) {
    Token t;
    t.text = std::string(text.substr(s, e - s));
    t.lower = ToLower(t.text);
    t.start = base + s;
    t.end = base + e;
    out.push_back(std::move(t));
  };
  while (a < b && IsPunct(text[a])) {
    emit(a, a + 1);
    ++a;
  }
  size_t e = b;
  while (e > a && IsPunct(text[e - 1])) --e;
  size_t piece = a;
  for (size_t i = a; i < e; ++i) {
    if (text[i] == '-' || text[i] == '/') {
      if (i > piece) SplitChunk(text, piece, i, base, out);
      emit(i, i + 1);
      piece = i + 1;
    }
  }
  if (e > piece) {
    if (piece == a) {
      emit(piece, e);
    } else {
      SplitChunk(text, piece, e, base, out);
    }
  }
  for (size_t i = e; i < b; ++i) emit(i, i + 1);
}

const std::unordered_map<std::string_view, Pos> &Lexicon() {
  static const auto *lexicon = [] {
    auto *m = new std::unordered_map<std::string_view, Pos>;
    for (std::string_view w :
         {"the", "a", "an", "this", "that", "these", "those", "each", "every",
          "some", "any", "no", "all", "both", "either", "neither", "its",
          "their", "his", "her", "our", "my", "your", "another", "such"}) {
      (*m)[w] = Pos::kDet;
    }
    for (std::string_view w :
         {"of", "in", "on", "at", "by", "for", "with", "from", "to", "into",
          "onto", "upon", "within", "without", "between", "among", "through",
          "throughout", "during", "after", "before", "under", "over", "above",
          "below", "about", "against", "across", "along", "around", "behind",
          "beyond", "near", "via", "per", "toward", "towards", "despite",
          "since", "until", "than", "like", "beside", "besides", "inside",
          "outside", "underneath", "amongst", "following", "including"}) {
      (*m)[w] = Pos::kPrep;
    }
    for (std::string_view w :
         {"and", "or", "but", "nor", "yet", "because", "although", "though",
          "whereas", "if", "unless", "whether", "while", "as", "so", "once",
          "when", "where", "whenever", "plus", "versus", "vs"}) {
      (*m)[w] = Pos::kConj;
    }
    for (std::string_view w :
         {"is", "are", "was", "were", "be", "been", "being", "has", "have",
          "had", "do", "does", "did", "may", "might", "can", "could", "will",
          "would", "shall", "should", "must", "show", "shows", "cause",
          "causes", "present", "presents"}) {
      (*m)[w] = Pos::kVerb;
    }
    for (std::string_view w :
         {"not", "very", "also", "often", "more", "most", "less", "least",
          "too", "then", "there", "here", "however", "thus", "still",
          "already", "always", "never", "rarely", "sometimes", "only"}) {
      (*m)[w] = Pos::kAdv;
    }
    for (std::string_view w :
         {"he", "she", "it", "they", "we", "i", "you", "him", "them", "us",
          "me", "which", "who", "whom", "whose", "what"}) {
      (*m)[w] = Pos::kOther;
    }
    for (std::string_view w :
         {"one", "two", "three", "four", "five", "six", "seven", "eight",
          "nine", "ten"}) {
      (*m)[w] = Pos::kNum;
    }
    // Words ending in -ly that are not adverbs.
    for (std::string_view w :
         {"family", "assembly", "reply", "ally", "belly", "jelly", "fly",
          "lily", "rally", "bully", "italy", "july"}) {
      (*m)[w] = Pos::kNoun;
    }
    for (std::string_view w :
         {"early", "holy", "ugly", "hourly", "daily", "weekly", "monthly",
          "yearly", "elderly", "friendly", "lonely", "likely", "unlikely"}) {
      (*m)[w] = Pos::kAdj;
    }
    return m;
  }();
  return *lexicon;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

const char *PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kDet: return "DET";
    case Pos::kPrep: return "PREP";
    case Pos::kConj: return "CONJ";
    case Pos::kPunct: return "PUNCT";
    case Pos::kNum: return "NUM";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (IsUpper(static_cast<unsigned char>(c))) c = static_cast<char>(c + ('a' - 'A'));
  }
  return out;
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Sentence> sentences;
  const size_t n = text.size();
  size_t start = 0;
  while (start < n && IsSpace(text[start])) ++start;
  for (size_t i = start; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    size_t j = i + 1;
    while (j < n && (text[j] == ')' || text[j] == '"' || text[j] == '\'' || text[j] == ']')) ++j;
    if (j >= n || !IsSpace(text[j])) continue;
    size_t k = j;
    while (k < n && IsSpace(text[k])) ++k;
    if (k >= n) break;
    if (!IsUpper(text[k]) && !IsDigit(text[k])) continue;
    if (c == '.' && IsGuarded(text, i)) continue;
    sentences.push_back(Sentence{start, j, {}});
    start = k;
    i = k - 1;
  }
  size_t end = n;
  while (end > start && IsSpace(text[end - 1])) --end;
  if (end > start) sentences.push_back(Sentence{start, end, {}});
  return sentences;
}

std::vector<Token> Tokenize(std::string_view sentence_text, size_t base_offset) {
  std::vector<Token> tokens;
  const size_t n = sentence_text.size();
  size_t i = 0;
  while (i < n) {
    while (i < n && IsSpace(sentence_text[i])) ++i;
    size_t j = i;
    while (j < n && !IsSpace(sentence_text[j])) ++j;
    if (j > i) SplitChunk(sentence_text, i, j, base_offset, tokens);
    i = j;
  }
  return tokens;
}

Pos TagWord(std::string_view w) {
  if (w.empty()) return Pos::kOther;
  if (std::all_of(w.begin(), w.end(), [](char c) { return IsPunct(c); })) {
    return Pos::kPunct;
  }
  const auto &lex = Lexicon();
  if (auto it = lex.find(w); it != lex.end()) return it->second;
  if (IsDigit(w.front())) return Pos::kNum;
  if (w.size() > 4 && EndsWith(w, "ly") && !EndsWith(w, "aly") &&
      !EndsWith(w, "ply")) {
    return Pos::kAdv;
  }
  if (w.size() > 5 && EndsWith(w, "ing")) return Pos::kVerb;
  if (w.size() > 4 && (EndsWith(w, "ize") || EndsWith(w, "ise"))) return Pos::kVerb;
  if (w.size() > 4 && EndsWith(w, "ed")) return Pos::kVerb;
  for (std::string_view suffix : {"al", "ous", "ic", "ive", "ible", "able", "ful", "less", "ary", "oid"}) {
    if (w.size() > suffix.size() + 2 && EndsWith(w, suffix)) return Pos::kAdj;
  }
  return Pos::kNoun;
}

void PosTag(std::vector<Token> &tokens) {
  for (Token &t : tokens) t.pos = TagWord(t.lower);
}

std::vector<Sentence> AnalyzeDocument(std::string_view text) {
  std::vector<Sentence> sentences = SplitSentences(text);
  for (Sentence &s : sentences) {
    s.tokens = Tokenize(text.substr(s.start, s.end - s.start), s.start);
    PosTag(s.tokens);
  }
  return sentences;
}

std::vector<std::string> NormalizedTokens(std::string_view text) {
  std::vector<std::string> out;
  for (Token &t : Tokenize(text)) out.push_back(std::move(t.lower));
  return out;
}

std::string JoinTokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string Normalize(std::string_view text) {
  return JoinTokens(NormalizedTokens(text));
}

std::vector<std::string> SplitSpaces(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find(' ', i);
    if (j == std::string_view::npos) j = text.size();
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

}  // namespace ontotag
