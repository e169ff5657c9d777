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

#include "ontotag/pubtator.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ontotag/error.h"
#include "ontotag/textproc.h"

namespace ontotag {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (true) {
    size_t j = line.find('\t', i);
    out.push_back(line.substr(i, j == std::string_view::npos ? j : j - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

size_t ParseOffset(std::string_view s, size_t line_no) {
  size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::kParse,
                "PubTator line " + std::to_string(line_no) + ": bad offset '" +
                    std::string(s) + "'");
  }
  return v;
}

std::string ParseError(size_t line_no, const std::string &what) {
  return "PubTator line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

size_t ByteToCodepoint(std::string_view text, size_t byte_offset) {
  size_t cp = 0;
  const size_t n = std::min(byte_offset, text.size());
  for (size_t i = 0; i < n; ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++cp;
  }
  return cp + (byte_offset - n);
}

size_t CodepointToByte(std::string_view text, size_t cp_offset) {
  size_t cp = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      if (cp == cp_offset) return i;
      ++cp;
    }
  }
  return text.size() + (cp_offset - cp);
}

std::vector<PubtatorDoc> ReadPubtator(std::istream &in) {
  std::vector<PubtatorDoc> docs;
  std::optional<PubtatorDoc> doc;
  std::string text;  // cached doc->text() once the abstract is known
  auto flush = [&] {
    if (doc) docs.push_back(std::move(*doc));
    doc.reset();
  };
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const size_t bar = line.find('|');
    const size_t tab = line.find('\t');
    if (bar != std::string::npos && (tab == std::string::npos || bar < tab) &&
        line.size() >= bar + 3 && line[bar + 2] == '|' &&
        (line[bar + 1] == 't' || line[bar + 1] == 'a')) {
      std::string id = line.substr(0, bar);
      std::string body = line.substr(bar + 3);
      if (line[bar + 1] == 't') {
        flush();
        doc.emplace();
        doc->id = std::move(id);
        doc->title = std::move(body);
      } else {
        if (!doc || doc->id != id) {
          throw Error(ErrorKind::kParse, ParseError(line_no, "abstract without title"));
        }
        doc->abstract = std::move(body);
      }
      text = doc->text();
      continue;
    }
    auto fields = SplitTabs(line);
    if (fields.size() < 5 || !doc || fields[0] != doc->id) {
      throw Error(ErrorKind::kParse, ParseError(line_no, "unrecognized line"));
    }
    Annotation a;
    const size_t start_cp = ParseOffset(fields[1], line_no);
    const size_t end_cp = ParseOffset(fields[2], line_no);
    a.start = CodepointToByte(text, start_cp);
    a.end = CodepointToByte(text, end_cp);
    if (a.start >= a.end || a.end > text.size()) {
      throw Error(ErrorKind::kParse, ParseError(line_no, "annotation span out of range"));
    }
    a.text = std::string(fields[3]);
    a.label = fields.size() > 5 ? std::string(fields[5]) : std::string();
    doc->annotations.push_back(std::move(a));
  }
  flush();
  return docs;
}

void WritePubtatorDoc(const PubtatorDoc &doc, std::ostream &out) {
  const std::string text = doc.text();
  out << doc.id << "|t|" << doc.title << '\n';
  out << doc.id << "|a|" << doc.abstract << '\n';
  for (const Annotation &a : doc.annotations) {
    out << doc.id << '\t' << ByteToCodepoint(text, a.start) << '\t'
        << ByteToCodepoint(text, a.end) << '\t' << a.text << '\t' << kEntityType << '\t'
        << a.label << '\n';
  }
  out << '\n';
}

void WritePubtator(const std::vector<PubtatorDoc> &docs, std::ostream &out) {
  for (const auto &doc : docs) WritePubtatorDoc(doc, out);
}

std::vector<PubtatorDoc> LoadPubtator(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open PubTator file " + path);
  return ReadPubtator(in);
}

PubtatorDoc PlainTextDocument(std::string id, std::string_view content) {
  PubtatorDoc doc;
  doc.id = std::move(id);
  std::string flat;
  flat.reserve(content.size());
  for (char c : content) {
    if (c != '\r') flat += c;
  }
  while (!flat.empty() && flat.back() == '\n') flat.pop_back();
  const size_t nl = flat.find('\n');
  doc.title = flat.substr(0, nl);
  if (nl != std::string::npos) {
    doc.abstract = flat.substr(nl + 1);
    std::replace(doc.abstract.begin(), doc.abstract.end(), '\n', ' ');
  }
  return doc;
}

std::vector<PubtatorDoc> LoadDocuments(const std::string &path,
                                       std::vector<DocumentError> *errors) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(path, ec)) throw Error(ErrorKind::kIo, "input not found: " + path);
  if (!fs::is_directory(path, ec)) return LoadPubtator(path);
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(path, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PubtatorDoc> docs;
  for (const auto &f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream ss;
    if (in) ss << in.rdbuf();
    if (!in || in.bad()) {
      if (errors == nullptr) throw Error(ErrorKind::kIo, "cannot read " + f.string());
      errors->push_back({f.stem().string(), "cannot read " + f.string()});
      continue;
    }
    docs.push_back(PlainTextDocument(f.stem().string(), ss.str()));
  }
  return docs;
}

GoldSet GoldFromDocs(const std::vector<PubtatorDoc> &docs) {
  GoldSet gold;
  for (const auto &doc : docs) {
    DocGold &g = gold[doc.id];
    g.mentions = ToMentions(doc.annotations);
    for (const auto &a : doc.annotations) g.labels.insert(a.label);
    for (const Token &t : Tokenize(doc.text())) g.tokens.push_back({t.start, t.end});
  }
  return gold;
}

PredSet PredFromDocs(const std::vector<PubtatorDoc> &docs) {
  PredSet pred;
  for (const auto &doc : docs) pred[doc.id] = ToMentions(doc.annotations);
  return pred;
}

GoldSet ReadDocLevelGold(std::istream &in) {
  GoldSet gold;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::kParse,
                  "gold line " + std::to_string(line_no) + ": expected 'doc_id<TAB>label'");
    }
    gold[std::string(fields[0])].labels.insert(std::string(fields[1]));
  }
  return gold;
}

}  // namespace ontotag
