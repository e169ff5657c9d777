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

// Distantly supervised training data: dictionary entries are positives,
// random corpus n-grams that are not dictionary terms are NONE negatives.

#ifndef ONTOTAG_DATASET_H_
#define ONTOTAG_DATASET_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ontotag/ontology.h"

namespace ontotag {

inline constexpr std::string_view kNoneLabel = "NONE";

struct TrainingInstance {
  std::vector<std::string> tokens;  // lowercase
  std::string label;                // dictionary label or NONE

  friend bool operator==(const TrainingInstance &, const TrainingInstance &) = default;
};

struct DatasetSpec {
  size_t negative_count = 0;
  size_t max_ngram = 10;
  uint64_t seed = 1;
  double dev_fraction = 0.1;
};

struct Positives {
  std::vector<TrainingInstance> instances;
  size_t skipped_overlong = 0;
};

// One instance per entry; entries longer than `max_tokens` are skipped.
Positives GeneratePositives(const Dictionary &dictionary, size_t max_tokens = 10);

// Exactly spec.negative_count NONE instances drawn from corpus sentences.
// Throws Error(kSampling) if 100x the quota in draws does not fill it.
std::vector<TrainingInstance> SampleNegatives(const std::vector<std::string> &corpus,
                                              const Dictionary &dictionary,
                                              const DatasetSpec &spec);

struct Split {
  std::vector<TrainingInstance> train;
  std::vector<TrainingInstance> dev;
};

// Shuffles positives + negatives and moves floor(n * dev_fraction) instances
// to dev. An instance only goes to dev if its label keeps at least one
// training instance; NONE is placed in dev first when there are at least
// two negatives.
Split Assemble(const std::vector<TrainingInstance> &positives,
               const std::vector<TrainingInstance> &negatives, const DatasetSpec &spec);

// `label<TAB>tok1 tok2 ...` per line.
void WriteDataset(const std::vector<TrainingInstance> &instances, std::ostream &out);
std::vector<TrainingInstance> ReadDataset(std::istream &in);
void SaveDataset(const std::vector<TrainingInstance> &instances, const std::string &path);
std::vector<TrainingInstance> LoadDataset(const std::string &path);

// Reads a corpus: a directory of plain-text files (sorted by name) or a
// single file with one document per line.
std::vector<std::string> LoadCorpus(const std::string &path);

}  // namespace ontotag

#endif  // ONTOTAG_DATASET_H_
