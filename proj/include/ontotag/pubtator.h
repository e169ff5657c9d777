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

// PubTator documents:
//
//   <id>|t|<title>
//   <id>|a|<abstract>
//   <id>\t<start>\t<end>\t<text>\t<type>\t<label>
//   <blank line>
//
// The document text is title + " " + abstract. File offsets count Unicode
// code points; in memory they are byte offsets into the UTF-8 text.

#ifndef ONTOTAG_PUBTATOR_H_
#define ONTOTAG_PUBTATOR_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/eval.h"

namespace ontotag {

struct PubtatorDoc {
  std::string id;
  std::string title;
  std::string abstract;
  std::vector<Annotation> annotations;  // byte offsets into text()

  std::string text() const { return title + " " + abstract; }
};

inline constexpr std::string_view kEntityType = "Phenotype";

std::vector<PubtatorDoc> ReadPubtator(std::istream &in);
void WritePubtator(const std::vector<PubtatorDoc> &docs, std::ostream &out);
void WritePubtatorDoc(const PubtatorDoc &doc, std::ostream &out);

std::vector<PubtatorDoc> LoadPubtator(const std::string &path);

// Input documents: a PubTator file, or a directory of plain-text files
// (id = filename stem; first line is the title, the rest the abstract with
// line breaks turned into spaces). With `errors`, unreadable files in a
// directory are recorded there and skipped instead of aborting the load.
struct DocumentError {
  std::string id;
  std::string message;
};
std::vector<PubtatorDoc> LoadDocuments(const std::string &path,
                                       std::vector<DocumentError> *errors = nullptr);

PubtatorDoc PlainTextDocument(std::string id, std::string_view content);

// UTF-8 byte offset <-> code point offset within `text`.
size_t ByteToCodepoint(std::string_view text, size_t byte_offset);
size_t CodepointToByte(std::string_view text, size_t cp_offset);

// Mention-level gold from annotated documents, tokenized for relaxed
// matching.
GoldSet GoldFromDocs(const std::vector<PubtatorDoc> &docs);
PredSet PredFromDocs(const std::vector<PubtatorDoc> &docs);

// `doc_id<TAB>label` lines: document-level gold.
GoldSet ReadDocLevelGold(std::istream &in);

}  // namespace ontotag

#endif  // ONTOTAG_PUBTATOR_H_
