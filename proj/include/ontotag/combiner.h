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

// Fusion of dictionary and classifier annotations, and abbreviation
// propagation.
//
// Overlap resolution, applied in this order:
//   1. Annotations that overlap nothing are kept.
//   2. Of two overlapping annotations with the same label, the weaker one is
//      dropped.
//   3. Of two annotations with identical (start, end) and different labels,
//      the weaker one is dropped.
//   4. Overlapping annotations with different spans and different labels are
//      all kept.
// "Weaker" compares score, then prefers DICT, then the longer span, then the
// smaller start (then the smaller label).

#ifndef ONTOTAG_COMBINER_H_
#define ONTOTAG_COMBINER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ontotag/annotation.h"
#include "ontotag/textproc.h"

namespace ontotag {

// Half-open interval intersection.
bool Overlaps(const Annotation &a, const Annotation &b);

// True if `a` is preferred over `b` when one of them must go.
bool Dominates(const Annotation &a, const Annotation &b);

// Output sorted by (start, end, label), without exact duplicates. Every
// output annotation is one of the inputs.
std::vector<Annotation> Combine(const std::vector<Annotation> &dict_anns,
                                const std::vector<Annotation> &ml_anns);

struct TextSpan {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  friend bool operator==(const TextSpan &, const TextSpan &) = default;
};

struct AbbrevPair {
  TextSpan short_form;
  TextSpan long_form;
  friend bool operator==(const AbbrevPair &, const AbbrevPair &) = default;
};

// Schwartz-Hearst extraction over "long form (SF)" and "SF (long form)"
// patterns within each sentence.
std::vector<AbbrevPair> ExtractAbbrevPairs(std::string_view text,
                                           const std::vector<Sentence> &sentences);

// Best long form for `short_form` as a suffix of `candidate`: the offset into
// `candidate` where it starts, or npos if the short form's characters cannot
// be aligned.
size_t FindBestLongForm(std::string_view short_form, std::string_view candidate);

// For each pair whose long form lies inside an annotation, tags every
// word-bounded occurrence of the short form with that annotation's label
// and score (the strongest such annotation per label). Output sorted by
// (start, end, label).
std::vector<Annotation> PropagateAbbrevs(const std::vector<Annotation> &anns,
                                         const std::vector<AbbrevPair> &pairs,
                                         std::string_view text);

}  // namespace ontotag

#endif  // ONTOTAG_COMBINER_H_
