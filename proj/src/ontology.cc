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

#include "ontotag/ontology.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ontotag/error.h"
#include "ontotag/textproc.h"

namespace ontotag {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string ParseError(size_t line, const std::string &what) {
  return "line " + std::to_string(line) + ": " + what;
}

// Extracts the quoted text of a synonym value: "text" SCOPE [xrefs].
std::string QuotedText(std::string_view value, size_t line) {
  if (value.empty() || value.front() != '"') {
    throw Error(ErrorKind::kParse, ParseError(line, "synonym value is not quoted"));
  }
  std::string out;
  for (size_t i = 1; i < value.size(); ++i) {
    char c = value[i];
    if (c == '\\' && i + 1 < value.size()) {
      out += value[++i];
    } else if (c == '"') {
      return out;
    } else {
      out += c;
    }
  }
  throw Error(ErrorKind::kParse, ParseError(line, "unterminated synonym quote"));
}

struct PendingTerm {
  Concept entry;
  size_t line = 0;
  bool has_id = false;
  bool has_name = false;
};

void DedupeSynonyms(Concept &c) {
  std::vector<std::string> seen = {ToLower(c.name)};
  std::vector<std::string> kept;
  for (auto &syn : c.synonyms) {
    std::string key = ToLower(syn);
    if (syn.empty() || std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    kept.push_back(std::move(syn));
  }
  c.synonyms = std::move(kept);
}

void ValidateLabel(std::string_view label, std::string_view context) {
  std::vector<std::string> ids = SplitLabel(label);
  bool ok = !ids.empty();
  for (size_t i = 0; ok && i < ids.size(); ++i) {
    const std::string &id = ids[i];
    ok = !id.empty() && id.find_first_of(" \t\n\r") == std::string::npos;
    if (ok && i > 0) ok = ids[i - 1] < id;
  }
  if (!ok) {
    throw Error(ErrorKind::kValidation,
                "invalid label '" + std::string(label) + "' for " + std::string(context));
  }
}

}  // namespace

OntologyGraph::OntologyGraph(std::vector<Concept> concepts) {
  for (Concept &c : concepts) {
    std::string id = c.id;
    if (!concepts_.emplace(id, std::move(c)).second) {
      throw Error(ErrorKind::kValidation, "duplicate concept id " + id);
    }
  }
  std::set<std::string> unresolved;
  for (const auto &[id, c] : concepts_) {
    if (c.parents.empty()) roots_.push_back(id);
    for (const std::string &p : c.parents) {
      if (!concepts_.count(p)) {
        unresolved.insert(p);
      } else {
        children_[p].push_back(id);
      }
    }
  }
  if (!unresolved.empty()) {
    std::string msg = "unresolved is_a targets:";
    for (const auto &id : unresolved) msg += " " + id;
    throw Error(ErrorKind::kValidation, msg);
  }
  // Cycle check: iterative DFS with white/grey/black marking.
  std::unordered_map<std::string_view, int> color;
  for (const auto &[id, c] : concepts_) {
    if (color[id] != 0) continue;
    std::vector<std::pair<std::string_view, size_t>> stack = {{id, 0}};
    color[id] = 1;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      const auto &parents = concepts_.at(std::string(node)).parents;
      if (next == parents.size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      std::string_view parent = parents[next++];
      int &pc = color[parent];
      if (pc == 1) {
        throw Error(ErrorKind::kValidation,
                    "is_a cycle through " + std::string(parent));
      }
      if (pc == 0) {
        pc = 1;
        stack.emplace_back(concepts_.find(std::string(parent))->first, 0);
      }
    }
  }
}

const std::vector<std::string> &OntologyGraph::children(const std::string &id) const {
  static const std::vector<std::string> kNone;
  auto it = children_.find(id);
  return it == children_.end() ? kNone : it->second;
}

const Concept *OntologyGraph::Find(std::string_view id) const {
  auto it = concepts_.find(std::string(id));
  return it == concepts_.end() ? nullptr : &it->second;
}

OntologyGraph ParseObo(std::istream &in) {
  std::vector<Concept> concepts;
  std::set<std::string> ids;
  std::optional<PendingTerm> term;
  auto finish = [&] {
    if (!term) return;
    if (!term->has_id) {
      throw Error(ErrorKind::kParse, ParseError(term->line, "[Term] stanza has no id"));
    }
    if (!term->has_name || term->entry.name.empty()) {
      throw Error(ErrorKind::kParse,
                  ParseError(term->line, "[Term] " + term->entry.id + " has no name"));
    }
    if (!ids.insert(term->entry.id).second) {
      throw Error(ErrorKind::kParse,
                  ParseError(term->line, "duplicate id " + term->entry.id));
    }
    if (!term->entry.obsolete) {
      DedupeSynonyms(term->entry);
      concepts.push_back(std::move(term->entry));
    }
    term.reset();
  };

  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '!') continue;
    if (line.front() == '[') {
      finish();
      if (line == "[Term]") {
        term.emplace();
        term->line = line_no;
      }
      continue;
    }
    if (!term) continue;  // header or non-Term stanza
    size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::kParse, ParseError(line_no, "expected 'tag: value'"));
    }
    std::string_view tag = Trim(line.substr(0, colon));
    std::string_view value = Trim(line.substr(colon + 1));
    Concept &c = term->entry;
    if (tag == "id") {
      c.id = std::string(value);
      term->has_id = !value.empty();
    } else if (tag == "name") {
      c.name = std::string(value);
      term->has_name = true;
    } else if (tag == "synonym") {
      c.synonyms.push_back(QuotedText(value, line_no));
    } else if (tag == "is_a") {
      size_t bang = value.find('!');
      std::string_view target = Trim(value.substr(0, bang));
      size_t brace = target.find('{');
      target = Trim(target.substr(0, brace));
      if (target.empty()) {
        throw Error(ErrorKind::kParse, ParseError(line_no, "empty is_a target"));
      }
      c.parents.emplace_back(target);
    } else if (tag == "is_obsolete") {
      c.obsolete = value == "true";
    }
  }
  finish();
  return OntologyGraph(std::move(concepts));
}

OntologyGraph LoadObo(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open ontology file " + path);
  return ParseObo(in);
}

std::set<std::string> SelectSubontology(const OntologyGraph &graph,
                                        const std::string &root_id) {
  if (!graph.Find(root_id)) {
    throw Error(ErrorKind::kNotFound, "root concept " + root_id + " not in ontology");
  }
  std::set<std::string> out = {root_id};
  std::deque<std::string> queue = {root_id};
  while (!queue.empty()) {
    std::string id = std::move(queue.front());
    queue.pop_front();
    for (const std::string &child : graph.children(id)) {
      if (out.insert(child).second) queue.push_back(child);
    }
  }
  return out;
}

bool IsAbbreviation(std::string_view term) {
  std::vector<Token> tokens = Tokenize(term);
  if (tokens.size() != 1 || tokens[0].text.size() > 5) return false;
  int letters = 0, upper = 0;
  for (unsigned char c : tokens[0].text) {
    if ((c | 0x20) >= 'a' && (c | 0x20) <= 'z') {
      ++letters;
      if (c >= 'A' && c <= 'Z') ++upper;
    }
  }
  return letters > 0 && upper * 10 >= letters * 6;
}

namespace {

const std::unordered_map<std::string_view, std::string_view> &LemmaExceptions() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      // Irregular plurals.
      {"feet", "foot"}, {"teeth", "tooth"}, {"children", "child"},
      {"men", "man"}, {"women", "woman"}, {"mice", "mouse"}, {"geese", "goose"},
      {"phalanges", "phalanx"}, {"testes", "testis"}, {"indices", "index"},
      {"appendices", "appendix"}, {"matrices", "matrix"}, {"apices", "apex"},
      {"vertices", "vertex"}, {"cortices", "cortex"}, {"cervices", "cervix"},
      {"criteria", "criterion"}, {"phenomena", "phenomenon"},
      {"ganglia", "ganglion"}, {"foramina", "foramen"}, {"lumina", "lumen"},
      {"bronchi", "bronchus"}, {"nuclei", "nucleus"}, {"fungi", "fungus"},
      {"stimuli", "stimulus"}, {"villi", "villus"}, {"alveoli", "alveolus"},
      {"calculi", "calculus"}, {"sulci", "sulcus"}, {"gyri", "gyrus"},
      {"bacteria", "bacterium"}, {"data", "datum"}, {"stomata", "stoma"},
      {"carcinomata", "carcinoma"}, {"halves", "half"}, {"knives", "knife"},
      {"leaves", "leaf"}, {"calves", "calf"}, {"hooves", "hoof"},
      {"lives", "life"}, {"wives", "wife"},
      // Plurals of nouns ending in -se.
      {"diseases", "disease"}, {"cases", "case"}, {"causes", "cause"},
      {"phases", "phase"}, {"doses", "dose"}, {"responses", "response"},
      {"lenses", "lens"}, {"nurses", "nurse"}, {"courses", "course"},
      {"houses", "house"}, {"purposes", "purpose"}, {"bases", "base"},
      {"pulses", "pulse"}, {"senses", "sense"}, {"releases", "release"},
      {"increases", "increase"}, {"decreases", "decrease"}, {"noses", "nose"},
      {"pauses", "pause"}, {"collapses", "collapse"}, {"relapses", "relapse"},
      {"synapses", "synapse"}, {"clauses", "clause"}, {"uses", "use"},
      {"expenses", "expense"}, {"defenses", "defense"}, {"impulses", "impulse"},
      {"lapses", "lapse"}, {"prolapses", "prolapse"}, {"ellipses", "ellipse"},
      {"enzymes", "enzyme"}, {"horses", "horse"}, {"verses", "verse"},
      {"glucoses", "glucose"}, {"vases", "vase"}, {"rises", "rise"},
      // Words ending in -s that are not plurals.
      {"series", "series"}, {"species", "species"}, {"diabetes", "diabetes"},
      {"herpes", "herpes"}, {"rabies", "rabies"}, {"scabies", "scabies"},
      {"measles", "measles"}, {"mumps", "mumps"}, {"rickets", "rickets"},
      {"news", "news"}, {"lens", "lens"}, {"pancreas", "pancreas"},
      {"always", "always"}, {"perhaps", "perhaps"}, {"whereas", "whereas"},
      {"does", "does"}, {"alias", "alias"}, {"atlas", "atlas"},
      {"gas", "gas"}, {"bias", "bias"}, {"canvas", "canvas"},
      {"biceps", "biceps"}, {"triceps", "triceps"}, {"forceps", "forceps"},
      {"pubes", "pubes"}, {"genitalia", "genitalia"}, {"nares", "naris"},
      {"axes", "axis"}, {"pelves", "pelvis"}, {"various", "various"},
  };
  return table;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string LemmatizeToken(std::string_view w) {
  const auto &exceptions = LemmaExceptions();
  if (auto it = exceptions.find(w); it != exceptions.end()) return std::string(it->second);
  if (w.size() <= 3) return std::string(w);
  auto stem = [&](size_t drop) { return std::string(w.substr(0, w.size() - drop)); };
  if (w.size() > 4 && EndsWith(w, "ies")) return stem(3) + "y";
  if (EndsWith(w, "sses") || EndsWith(w, "uses") || EndsWith(w, "ches") ||
      EndsWith(w, "shes") || EndsWith(w, "xes")) {
    return stem(2);
  }
  if (EndsWith(w, "ses")) return stem(3) + "sis";
  if (w.size() > 4 && EndsWith(w, "ae")) return stem(1);
  if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) return std::string(w);
  if (EndsWith(w, "s")) return stem(1);
  return std::string(w);
}

std::vector<std::string> LemmatizeTokens(const std::vector<std::string> &tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) out.push_back(LemmatizeToken(t));
  return out;
}

std::vector<std::string> SplitLabel(std::string_view label) {
  std::vector<std::string> out;
  size_t i = 0;
  while (true) {
    size_t j = label.find(';', i);
    out.emplace_back(label.substr(i, j == std::string_view::npos ? j : j - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

Dictionary::Dictionary(DictEntries entries) : entries_(std::move(entries)) {
  for (const auto &[text, label] : entries_) {
    if (text.empty()) throw Error(ErrorKind::kValidation, "empty dictionary entry");
    if (Normalize(text) != text) {
      throw Error(ErrorKind::kValidation, "dictionary entry '" + text + "' is not normalized");
    }
    ValidateLabel(label, "entry '" + text + "'");
  }
}

const std::string *Dictionary::Lookup(std::string_view normalized) const {
  auto it = entries_.find(normalized);
  return it == entries_.end() ? nullptr : &it->second;
}

std::set<std::string> Dictionary::Labels() const {
  std::set<std::string> out;
  for (const auto &[text, label] : entries_) out.insert(label);
  return out;
}

void Dictionary::WriteTsv(std::ostream &out) const {
  for (const auto &[text, label] : entries_) out << text << '\t' << label << '\n';
}

Dictionary Dictionary::ReadTsv(std::istream &in) {
  DictEntries entries;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorKind::kParse,
                  ParseError(line_no, "expected 'text<TAB>label'"));
    }
    if (!entries.emplace(line.substr(0, tab), line.substr(tab + 1)).second) {
      throw Error(ErrorKind::kValidation,
                  ParseError(line_no, "duplicate entry '" + line.substr(0, tab) + "'"));
    }
  }
  return Dictionary(std::move(entries));
}

Dictionary BuildDictionary(const OntologyGraph &graph,
                           const std::set<std::string> &scope) {
  std::map<std::string, std::set<std::string>, std::less<>> ids_by_text;
  for (const std::string &id : scope) {
    const Concept *c = graph.Find(id);
    if (!c) throw Error(ErrorKind::kNotFound, "scope id " + id + " not in ontology");
    auto add = [&](const std::string &term) {
      if (IsAbbreviation(term)) return;
      std::vector<std::string> tokens = NormalizedTokens(term);
      if (tokens.empty()) return;
      ids_by_text[JoinTokens(tokens)].insert(id);
      ids_by_text[JoinTokens(LemmatizeTokens(tokens))].insert(id);
    };
    add(c->name);
    for (const auto &syn : c->synonyms) add(syn);
  }
  DictEntries entries;
  for (auto &[text, ids] : ids_by_text) {
    std::string label;
    for (const auto &id : ids) {
      if (!label.empty()) label += ';';
      label += id;
    }
    entries.emplace(text, std::move(label));
  }
  return Dictionary(std::move(entries));
}

Dictionary LoadDictionary(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open dictionary file " + path);
  return Dictionary::ReadTsv(in);
}

void SaveDictionary(const Dictionary &dict, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write dictionary file " + path);
  dict.WriteTsv(out);
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path);
}

}  // namespace ontotag
