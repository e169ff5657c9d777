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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "ontotag/error.h"
#include "ontotag/random.h"
#include "ontotag/textproc.h"

namespace ontotag {
namespace {

OntologyGraph Parse(const std::string &text) {
  std::istringstream in(text);
  return ParseObo(in);
}

ErrorKind KindOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kUsage;
}

std::string Stanza(const std::string &id, const std::string &name,
                   const std::vector<std::string> &parents = {},
                   const std::vector<std::string> &synonyms = {}) {
  std::string s = "[Term]\nid: " + id + "\nname: " + name + "\n";
  for (const auto &syn : synonyms) s += "synonym: \"" + syn + "\" EXACT []\n";
  for (const auto &p : parents) s += "is_a: " + p + " ! parent\n";
  return s + "\n";
}

TEST(ParseOboTest, MinimalStanza) {
  OntologyGraph g = Parse("[Term]\nid: HP:0000001\nname: All\n");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.Find("HP:0000001")->name, "All");
  EXPECT_TRUE(g.Find("HP:0000001")->synonyms.empty());
  EXPECT_EQ(g.roots(), std::vector<std::string>{"HP:0000001"});
}

TEST(ParseOboTest, SynonymScopesAreAccepted) {
  OntologyGraph g = Parse(
      "format-version: 1.2\n\n"
      "[Term]\nid: HP:0001140\nname: limbal dermoid\n"
      "def: \"A benign tumor.\" [HPO:probinson]\n"
      "synonym: \"benign eye tumor\" BROAD []\n"
      "synonym: \"epibulbar dermoid\" EXACT []\n"
      "synonym: \"epibulbar dermoids\" EXACT layperson [HPO:skoehler]\n");
  const Concept *c = g.Find("HP:0001140");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->synonyms, (std::vector<std::string>{"benign eye tumor", "epibulbar dermoid",
                                                   "epibulbar dermoids"}));
}

TEST(ParseOboTest, CaseFoldedDuplicateSynonymsCollapse) {
  OntologyGraph g = Parse(Stanza("X:1", "Ear pit", {}, {"ear pit", "Pit of ear", "pit of EAR"}));
  EXPECT_EQ(g.Find("X:1")->synonyms, std::vector<std::string>{"Pit of ear"});
}

TEST(ParseOboTest, DanglingParentNamesTheId) {
  const std::string text =
      Stanza("HP:A", "a") + Stanza("HP:B", "b", {"HP:A"}) + Stanza("HP:C", "c", {"HP:MISSING"});
  try {
    Parse(text);
    FAIL() << "expected a validation error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    EXPECT_NE(std::string(e.what()).find("HP:MISSING"), std::string::npos);
  }
}

TEST(ParseOboTest, MissingNameNamesTheLine) {
  try {
    Parse("[Term]\nid: HP:1\nname: ok\n\n[Term]\nid: HP:2\n");
    FAIL() << "expected a parse error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(ParseOboTest, MissingIdIsParseError) {
  EXPECT_EQ(KindOf([] { Parse("[Term]\nname: nothing\n"); }), ErrorKind::kParse);
}

TEST(ParseOboTest, ObsoleteTermsAndOtherStanzasAreDropped) {
  OntologyGraph g = Parse(Stanza("X:1", "kept") +
                          "[Term]\nid: X:2\nname: old\nis_obsolete: true\n\n"
                          "[Typedef]\nid: part_of\nname: part of\n");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.Find("X:2"), nullptr);
}

TEST(ParseOboTest, CycleIsRejected) {
  EXPECT_EQ(KindOf([] {
              Parse(Stanza("X:1", "a", {"X:3"}) + Stanza("X:2", "b", {"X:1"}) +
                    Stanza("X:3", "c", {"X:2"}));
            }),
            ErrorKind::kValidation);
}

TEST(SelectSubontologyTest, Chain) {
  OntologyGraph g = Parse(Stanza("A", "a") + Stanza("B", "b", {"A"}) + Stanza("C", "c", {"B"}));
  EXPECT_EQ(SelectSubontology(g, "A"), (std::set<std::string>{"A", "B", "C"}));
  EXPECT_EQ(SelectSubontology(g, "C"), (std::set<std::string>{"C"}));
}

TEST(SelectSubontologyTest, DiamondCountsSharedDescendantOnce) {
  OntologyGraph g = Parse(Stanza("A", "a") + Stanza("B", "b", {"A"}) + Stanza("C", "c", {"A"}) +
                          Stanza("D", "d", {"B", "C"}));
  EXPECT_EQ(SelectSubontology(g, "A"), (std::set<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(SelectSubontology(g, "B"), (std::set<std::string>{"B", "D"}));
}

TEST(SelectSubontologyTest, UnknownRootIsNotFound) {
  OntologyGraph g = Parse(Stanza("A", "a"));
  EXPECT_EQ(KindOf([&] { SelectSubontology(g, "Z"); }), ErrorKind::kNotFound);
}

// Reachability by repeated relaxation over an adjacency matrix.
TEST(SelectSubontologyTest, MatchesTransitiveClosureOnRandomDags) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    const size_t n = 1 + rng.Index(100);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::string text;
    for (size_t i = 0; i < n; ++i) {
      std::vector<std::string> parents;
      for (size_t j = 0; j < i; ++j) {
        if (rng.Index(n) < 2) {
          parents.push_back("N:" + std::to_string(j));
          reach[j][i] = true;
        }
      }
      text += Stanza("N:" + std::to_string(i), "node", parents);
    }
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        }
      }
    }
    OntologyGraph g = Parse(text);
    const size_t root = rng.Index(n);
    std::set<std::string> expected = {"N:" + std::to_string(root)};
    for (size_t j = 0; j < n; ++j) {
      if (reach[root][j]) expected.insert("N:" + std::to_string(j));
    }
    EXPECT_EQ(SelectSubontology(g, "N:" + std::to_string(root)), expected) << "seed " << seed;
  }
}

TEST(IsAbbreviationTest, Examples) {
  EXPECT_TRUE(IsAbbreviation("ASD"));
  EXPECT_FALSE(IsAbbreviation("limbal dermoid"));
  EXPECT_FALSE(IsAbbreviation("Cupped"));  // 1 of 6 letters uppercase
  EXPECT_TRUE(IsAbbreviation("VSDs"));     // 3 of 4
  EXPECT_FALSE(IsAbbreviation("ABCDEF"));  // longer than 5
}

TEST(LemmatizeTest, Examples) {
  EXPECT_EQ(LemmatizeTokens({"epibulbar", "dermoids"}),
            (std::vector<std::string>{"epibulbar", "dermoid"}));
  EXPECT_EQ(LemmatizeTokens({"ear"}), std::vector<std::string>{"ear"});
  EXPECT_EQ(LemmatizeToken("anomalies"), "anomaly");
}

TEST(LemmatizeTest, SuffixRulesAndExceptions) {
  EXPECT_EQ(LemmatizeToken("ears"), "ear");
  EXPECT_EQ(LemmatizeToken("abscess"), "abscess");
  EXPECT_EQ(LemmatizeToken("uterus"), "uterus");
  EXPECT_EQ(LemmatizeToken("stenosis"), "stenosis");
  EXPECT_EQ(LemmatizeToken("diagnoses"), "diagnosis");
  EXPECT_EQ(LemmatizeToken("vertebrae"), "vertebra");
  EXPECT_EQ(LemmatizeToken("teeth"), "tooth");
  EXPECT_EQ(LemmatizeToken("feet"), "foot");
  EXPECT_EQ(LemmatizeToken("diseases"), "disease");
  EXPECT_EQ(LemmatizeToken("-"), "-");
}

TEST(BuildDictionaryTest, SharedTextGetsCompositeLabel) {
  OntologyGraph g =
      Parse(Stanza("HP:0000598", "Abnormality of the ear", {}, {"ear anomaly"}) +
            Stanza("HP:0000356", "Abnormality of the outer ear", {}, {"Ear anomaly"}));
  Dictionary d = BuildDictionary(g, {"HP:0000356", "HP:0000598"});
  ASSERT_NE(d.Lookup("ear anomaly"), nullptr);
  EXPECT_EQ(*d.Lookup("ear anomaly"), "HP:0000356;HP:0000598");
  EXPECT_EQ(*d.Lookup("abnormality of the ear"), "HP:0000598");
}

TEST(BuildDictionaryTest, NameOnlyConceptGivesOneEntry) {
  OntologyGraph g = Parse(Stanza("X:1", "Ear"));
  Dictionary d = BuildDictionary(g, {"X:1"});
  EXPECT_EQ(d.term_count(), 1u);
  EXPECT_EQ(*d.Lookup("ear"), "X:1");
}

TEST(BuildDictionaryTest, InflectedSynonymAddsLemmaEntry) {
  OntologyGraph g = Parse(Stanza("HP:0000378", "Cupped ear", {}, {"cupped ears"}));
  Dictionary d = BuildDictionary(g, {"HP:0000378"});
  EXPECT_EQ(d.term_count(), 2u);
  EXPECT_EQ(*d.Lookup("cupped ears"), "HP:0000378");
  EXPECT_EQ(*d.Lookup("cupped ear"), "HP:0000378");
}

TEST(BuildDictionaryTest, AbbreviationsAndOutOfScopeConceptsAreSkipped) {
  OntologyGraph g = Parse(Stanza("X:1", "Atrial septal defect", {}, {"ASD"}) +
                          Stanza("X:2", "Other thing"));
  Dictionary d = BuildDictionary(g, {"X:1"});
  EXPECT_FALSE(d.Contains("asd"));
  EXPECT_FALSE(d.Contains("other thing"));
  EXPECT_TRUE(d.Contains("atrial septal defect"));
  EXPECT_TRUE(BuildDictionary(g, {}).empty());
}

TEST(BuildDictionaryTest, HyphenatedTermsUseSharedTokenization) {
  OntologyGraph g = Parse(Stanza("X:1", "Cup-shaped ear"));
  Dictionary d = BuildDictionary(g, {"X:1"});
  EXPECT_TRUE(d.Contains(Normalize("cup-shaped ear")));
  EXPECT_TRUE(d.Contains("cup - shaped ear"));
}

TEST(BuildDictionaryTest, SynonymOrderDoesNotMatter) {
  std::vector<std::string> syns = {"ear anomaly", "pinna defect", "auricular anomalies",
                                   "ear defects", "outer ear anomaly"};
  Dictionary reference;
  for (int round = 0; round < 6; ++round) {
    Rng rng(round + 1);
    std::vector<std::string> a = syns, b = syns;
    rng.Shuffle(a);
    rng.Shuffle(b);
    OntologyGraph g = Parse(Stanza("X:2", "ear anomaly", {}, b) + Stanza("X:1", "ear thing", {}, a));
    Dictionary d = BuildDictionary(g, {"X:1", "X:2"});
    std::ostringstream tsv;
    d.WriteTsv(tsv);
    if (round == 0) {
      reference = d;
    } else {
      EXPECT_EQ(d, reference);
    }
  }
}

TEST(BuildDictionaryTest, EntriesAreNormalizationFixedPoints) {
  OntologyGraph g = Parse(Stanza("X:1", "Abnormal (Cupped) EARS, bilateral", {},
                                 {"Ear/pinna malformations", "Crumpled-Ear"}) +
                          Stanza("X:2", "Short stature"));
  Dictionary d = BuildDictionary(g, {"X:1", "X:2"});
  size_t named = 2;
  EXPECT_GE(d.term_count(), named);
  for (const auto &[text, label] : d.entries()) EXPECT_EQ(Normalize(text), text);
}

TEST(DictionaryTest, TsvRoundTrip) {
  Dictionary d(DictEntries{{"ear anomaly", "HP:1;HP:2"}, {"short stature", "HP:3"}});
  std::stringstream s;
  d.WriteTsv(s);
  EXPECT_EQ(s.str(), "ear anomaly\tHP:1;HP:2\nshort stature\tHP:3\n");
  EXPECT_EQ(Dictionary::ReadTsv(s), d);
}

TEST(DictionaryTest, InvalidEntriesAreRejected) {
  EXPECT_EQ(KindOf([] { Dictionary(DictEntries{{"Ear", "HP:1"}}); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Dictionary(DictEntries{{"ear", "HP:2;HP:1"}}); }),
            ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] { Dictionary(DictEntries{{"ear", ""}}); }), ErrorKind::kValidation);
  EXPECT_EQ(KindOf([] {
              std::istringstream in("ear\tHP:1\nbroken line\n");
              Dictionary::ReadTsv(in);
            }),
            ErrorKind::kParse);
}

}  // namespace
}  // namespace ontotag
