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

// Writes the synthetic toy fixture (ontology, corpus, gold documents) to a
// directory, for trying the CLI end to end.
//
//   make_toy_fixture --output toy/ [--seed 7]

#include <iostream>

#include "CLI11.hpp"
#include "ontotag/error.h"
#include "toy_fixture.h"

int main(int argc, char **argv) {
  CLI::App app{"Write the synthetic toy fixture."};
  std::string output;
  ontotag::testing::ToyOptions options;
  app.add_option("--output", output, "Output directory")->required();
  app.add_option("--seed", options.seed, "Generator seed");
  app.add_option("--corpus-docs", options.corpus_docs, "Training corpus size");
  app.add_option("--eval-docs", options.eval_docs, "Evaluation documents");
  CLI11_PARSE(app, argc, argv);
  try {
    ontotag::testing::WriteToyFixture(ontotag::testing::MakeToyFixture(options), output);
  } catch (const ontotag::Error &e) {
    std::cerr << "make_toy_fixture: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
