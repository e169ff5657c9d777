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

#include <algorithm>

namespace ontotag {

TokenTrie::TokenTrie() : nodes_(1) {}

TokenTrie::TokenTrie(const Dictionary &dictionary) : nodes_(1) {
  for (const auto &[text, label] : dictionary.entries()) {
    Insert(NormalizedTokens(text), label);
  }
}

void TokenTrie::Insert(const std::vector<std::string> &tokens, std::string label) {
  int32_t node = kRoot;
  for (const std::string &tok : tokens) {
    auto it = nodes_[node].children.find(tok);
    if (it != nodes_[node].children.end()) {
      node = it->second;
      continue;
    }
    int32_t next = static_cast<int32_t>(nodes_.size());
    nodes_[node].children.emplace(tok, next);
    nodes_.emplace_back();
    node = next;
  }
  nodes_[node].label = std::move(label);
  max_depth_ = std::max(max_depth_, tokens.size());
}

int32_t TokenTrie::Child(int32_t node, std::string_view token) const {
  const auto &children = nodes_[node].children;
  auto it = children.find(token);
  return it == children.end() ? -1 : it->second;
}

std::vector<std::pair<std::string, std::string>> TokenTrie::Enumerate() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::string> path;
  // Explicit stack of (node, child iterator position).
  struct Frame {
    int32_t node;
    std::map<std::string, int32_t, std::less<>>::const_iterator next;
  };
  std::vector<Frame> stack = {{kRoot, nodes_[kRoot].children.begin()}};
  while (!stack.empty()) {
    Frame &f = stack.back();
    if (f.next == nodes_[f.node].children.end()) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const auto &[tok, child] = *f.next++;
    path.push_back(tok);
    if (nodes_[child].label) out.emplace_back(JoinTokens(path), *nodes_[child].label);
    stack.push_back({child, nodes_[child].children.begin()});
  }
  return out;
}

std::vector<Annotation> TagDictionary(const TokenTrie &trie, const Sentence &sentence,
                                      std::string_view text, MatchStats *stats) {
  std::vector<Annotation> out;
  const auto &tokens = sentence.tokens;
  for (size_t i = 0; i < tokens.size(); ++i) {
    int32_t node = TokenTrie::kRoot;
    for (size_t j = i; j < tokens.size(); ++j) {
      if (stats) ++stats->trie_steps;
      node = trie.Child(node, tokens[j].lower);
      if (node < 0) break;
      if (const auto &label = trie.Label(node)) {
        Annotation a;
        a.start = tokens[i].start;
        a.end = tokens[j].end;
        a.text = std::string(text.substr(a.start, a.end - a.start));
        a.label = *label;
        a.score = 1.0;
        a.source = Source::kDict;
        out.push_back(std::move(a));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Annotation &a, const Annotation &b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  return out;
}

}  // namespace ontotag
