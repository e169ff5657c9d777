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

#ifndef ONTOTAG_ANNOTATION_H_
#define ONTOTAG_ANNOTATION_H_

#include <cstddef>
#include <string>
#include <tuple>

namespace ontotag {

enum class Source { kDict, kMl };

// A tagged span of a document. Offsets are byte offsets into the document
// text, half-open.
struct Annotation {
  size_t start = 0;
  size_t end = 0;
  std::string text;
  std::string label;
  double score = 1.0;
  Source source = Source::kDict;

  size_t length() const { return end - start; }

  friend bool operator==(const Annotation &, const Annotation &) = default;
};

// Canonical order: (start, end, label).
inline bool AnnotationLess(const Annotation &a, const Annotation &b) {
  return std::tie(a.start, a.end, a.label) < std::tie(b.start, b.end, b.label);
}

inline const char *SourceName(Source s) {
  return s == Source::kDict ? "DICT" : "ML";
}

}  // namespace ontotag

#endif  // ONTOTAG_ANNOTATION_H_
