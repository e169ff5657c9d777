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

#include "ontotag/matcher.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "toy_fixture.h"

namespace ontotag {
namespace {

std::vector<Annotation> TagText(const TokenTrie &trie, const std::string &text,
                                MatchStats *stats = nullptr) {
  std::vector<Annotation> out;
  for (const Sentence &s : AnalyzeDocument(text)) {
    auto found = TagDictionary(trie, s, text, stats);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

TEST(TokenTrieTest, DepthEqualsEntryTokenCount) {
  TokenTrie trie(Dictionary(DictEntries{{"multiple congenital contractures", "HP:1"}}));
  EXPECT_EQ(trie.max_depth(), 3u);
  EXPECT_EQ(trie.node_count(), 4u);
}

TEST(TokenTrieTest, PrefixEntriesShareAPath) {
  TokenTrie trie(Dictionary(DictEntries{{"ear", "HP:1"}, {"ear anomaly", "HP:2"}}));
  const int32_t ear = trie.Child(TokenTrie::kRoot, "ear");
  ASSERT_GE(ear, 0);
  EXPECT_EQ(trie.Label(ear), "HP:1");
  const int32_t anomaly = trie.Child(ear, "anomaly");
  ASSERT_GE(anomaly, 0);
  EXPECT_EQ(trie.Label(anomaly), "HP:2");
  EXPECT_EQ(trie.Child(TokenTrie::kRoot, "anomaly"), -1);
}

TEST(TokenTrieTest, EnumerationReproducesTheDictionary) {
  const Dictionary dict = testing::ToyDictionary(testing::MakeToyFixture());
  TokenTrie trie(dict);
  DictEntries enumerated;
  for (auto &[text, label] : trie.Enumerate()) enumerated.emplace(text, label);
  EXPECT_EQ(enumerated, dict.entries());
}

TEST(TagDictionaryTest, EmitsEveryNestedMatch) {
  TokenTrie trie(Dictionary(DictEntries{{"multiple congenital contractures", "HP:0002804"},
                                        {"congenital contractures", "HP:0002803"},
                                        {"contractures", "HP:0001371"}}));
  auto anns = TagText(trie, "multiple congenital contractures");
  ASSERT_EQ(anns.size(), 3u);
  EXPECT_EQ(std::make_pair(anns[0].start, anns[0].end), std::make_pair(size_t{0}, size_t{32}));
  EXPECT_EQ(std::make_pair(anns[1].start, anns[1].end), std::make_pair(size_t{9}, size_t{32}));
  EXPECT_EQ(std::make_pair(anns[2].start, anns[2].end), std::make_pair(size_t{20}, size_t{32}));
  EXPECT_EQ(anns[0].label, "HP:0002804");
  for (const auto &a : anns) {
    EXPECT_EQ(a.score, 1.0);
    EXPECT_EQ(a.source, Source::kDict);
  }
}

TEST(TagDictionaryTest, EmptySentence) {
  TokenTrie trie(Dictionary(DictEntries{{"ear", "HP:1"}}));
  EXPECT_TRUE(TagDictionary(trie, Sentence{}, "").empty());
}

TEST(TagDictionaryTest, CaseInsensitive) {
  TokenTrie trie(Dictionary(DictEntries{{"ear anomaly", "HP:1"}}));
  auto anns = TagText(trie, "EAR ANOMALY");
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].text, "EAR ANOMALY");
}

TEST(TagDictionaryTest, PunctuationBlocksUnlessInTheEntry) {
  TokenTrie trie(Dictionary(DictEntries{{"ear anomaly", "HP:1"}, {"cup - shaped ear", "HP:2"}}));
  EXPECT_TRUE(TagText(trie, "ear, anomaly").empty());
  auto anns = TagText(trie, "A cup-shaped ear.");
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].text, "cup-shaped ear");
}

TEST(TagDictionaryTest, AgreesWithWindowScanAndBoundsSteps) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    auto [dict, text, s] = testing::RandomTrieFixture(seed);
    TokenTrie trie(dict);
    MatchStats stats;
    EXPECT_EQ(TagDictionary(trie, s, text, &stats), testing::OracleDictionaryTag(dict, s, text));
    EXPECT_LE(stats.trie_steps, s.tokens.size() * (trie.max_depth() + 1));
  }
}

}  // namespace
}  // namespace ontotag
