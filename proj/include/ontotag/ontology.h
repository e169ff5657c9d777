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

#ifndef ONTOTAG_ONTOLOGY_H_
#define ONTOTAG_ONTOLOGY_H_

#include <iosfwd>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontotag {

struct Concept {
  std::string id;
  std::string name;
  std::vector<std::string> synonyms;
  std::vector<std::string> parents;  // is_a targets
  bool obsolete = false;
};

// Parsed ontology. Immutable after construction; every parent reference
// resolves and the is_a relation is acyclic.
class OntologyGraph {
 public:
  OntologyGraph() = default;

  // Validates references and acyclicity; throws Error(kValidation).
  explicit OntologyGraph(std::vector<Concept> concepts);

  const std::map<std::string, Concept> &concepts() const { return concepts_; }
  const std::vector<std::string> &roots() const { return roots_; }
  const std::vector<std::string> &children(const std::string &id) const;

  const Concept *Find(std::string_view id) const;
  size_t size() const { return concepts_.size(); }

 private:
  std::map<std::string, Concept> concepts_;
  std::map<std::string, std::vector<std::string>> children_;
  std::vector<std::string> roots_;
};

// Reads the OBO subset: [Term] stanzas with id, name, synonym, is_a and
// is_obsolete tags. Obsolete terms are dropped, other tags and stanza types
// are skipped.
OntologyGraph ParseObo(std::istream &in);
OntologyGraph LoadObo(const std::string &path);

// `root_id` plus all of its descendants.
std::set<std::string> SelectSubontology(const OntologyGraph &graph,
                                        const std::string &root_id);

// Single token, at most 5 characters, and at least 60% of its letters
// uppercase.
bool IsAbbreviation(std::string_view term);

// Noun lemmatization by suffix rules and an exception table. Input tokens
// are lowercase.
std::string LemmatizeToken(std::string_view token);
std::vector<std::string> LemmatizeTokens(const std::vector<std::string> &tokens);

// Normalized term text -> label. A label is one ontology ID, or several
// sorted, distinct IDs joined by ';' when the same text belongs to more than
// one concept.
using DictEntries = std::map<std::string, std::string, std::less<>>;

class Dictionary {
 public:
  Dictionary() = default;
  // Validates the entry invariants; throws Error(kValidation).
  explicit Dictionary(DictEntries entries);

  const DictEntries &entries() const { return entries_; }
  size_t term_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Label for normalized text, or nullptr.
  const std::string *Lookup(std::string_view normalized) const;
  bool Contains(std::string_view normalized) const { return Lookup(normalized) != nullptr; }

  std::set<std::string> Labels() const;

  // `normalized_text<TAB>label` lines, sorted by text.
  void WriteTsv(std::ostream &out) const;
  static Dictionary ReadTsv(std::istream &in);

  friend bool operator==(const Dictionary &, const Dictionary &) = default;

 private:
  DictEntries entries_;
};

Dictionary BuildDictionary(const OntologyGraph &graph,
                           const std::set<std::string> &scope);

Dictionary LoadDictionary(const std::string &path);
void SaveDictionary(const Dictionary &dict, const std::string &path);

// Splits "A;B" into its member IDs.
std::vector<std::string> SplitLabel(std::string_view label);

}  // namespace ontotag

#endif  // ONTOTAG_ONTOLOGY_H_
