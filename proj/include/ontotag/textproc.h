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

// Sentence splitting, tokenization and coarse POS tagging. The same
// tokenizer normalizes dictionary terms and document text, so any term that
// occurs verbatim in a document is token-aligned with it.

#ifndef ONTOTAG_TEXTPROC_H_
#define ONTOTAG_TEXTPROC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ontotag {

enum class Pos { kNoun, kVerb, kAdj, kAdv, kDet, kPrep, kConj, kPunct, kNum, kOther };

const char *PosName(Pos pos);

struct Token {
  std::string text;
  std::string lower;
  size_t start = 0;  // byte offset into the document, inclusive
  size_t end = 0;    // exclusive
  Pos pos = Pos::kNoun;
};

struct Sentence {
  size_t start = 0;
  size_t end = 0;
  std::vector<Token> tokens;
};

// ASCII lowercase; bytes >= 0x80 are passed through untouched.
std::string ToLower(std::string_view s);

// Sentence boundaries over `text`. Tokens are left empty.
std::vector<Sentence> SplitSentences(std::string_view text);

// Tokenizes `sentence_text`; offsets are shifted by `base_offset` so they
// index the enclosing document. POS tags are not assigned.
std::vector<Token> Tokenize(std::string_view sentence_text, size_t base_offset = 0);

// Assigns a coarse tag to every token from its `lower` field.
void PosTag(std::vector<Token> &tokens);
Pos TagWord(std::string_view lower);

// Split + tokenize + tag: the full per-document preprocessing.
std::vector<Sentence> AnalyzeDocument(std::string_view text);

// Lowercased token texts of `text`.
std::vector<std::string> NormalizedTokens(std::string_view text);

// Lowercased tokens joined by single spaces. Idempotent.
std::string Normalize(std::string_view text);

std::string JoinTokens(const std::vector<std::string> &tokens);

// Splits on single ASCII spaces; used for already-normalized text.
std::vector<std::string> SplitSpaces(std::string_view text);

}  // namespace ontotag

#endif  // ONTOTAG_TEXTPROC_H_
