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

#ifndef ONTOTAG_MATCHER_H_
#define ONTOTAG_MATCHER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/ontology.h"
#include "ontotag/textproc.h"

namespace ontotag {

// Trie keyed by lowercase tokens. Terminal nodes carry the dictionary label.
class TokenTrie {
 public:
  TokenTrie();
  explicit TokenTrie(const Dictionary &dictionary);

  void Insert(const std::vector<std::string> &tokens, std::string label);

  // Node index reached from `node` by `token`, or -1.
  int32_t Child(int32_t node, std::string_view token) const;
  const std::optional<std::string> &Label(int32_t node) const { return nodes_[node].label; }

  static constexpr int32_t kRoot = 0;

  size_t node_count() const { return nodes_.size(); }
  size_t max_depth() const { return max_depth_; }

  // (space-joined tokens, label) of every terminal, in token order.
  std::vector<std::pair<std::string, std::string>> Enumerate() const;

 private:
  struct Node {
    std::map<std::string, int32_t, std::less<>> children;
    std::optional<std::string> label;
  };
  std::vector<Node> nodes_;
  size_t max_depth_ = 0;
};

struct MatchStats {
  size_t trie_steps = 0;
};

// Every dictionary match in `sentence`: for each start token, walks the trie
// and emits one score-1.0 annotation per terminal reached. `text` is the
// document the sentence offsets refer to. Output sorted by (start, end).
std::vector<Annotation> TagDictionary(const TokenTrie &trie, const Sentence &sentence,
                                      std::string_view text, MatchStats *stats = nullptr);

}  // namespace ontotag

#endif  // ONTOTAG_MATCHER_H_
