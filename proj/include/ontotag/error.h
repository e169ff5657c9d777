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

#ifndef ONTOTAG_ERROR_H_
#define ONTOTAG_ERROR_H_

#include <stdexcept>
#include <string>

namespace ontotag {

enum class ErrorKind {
  kParse,
  kValidation,
  kNotFound,
  kIo,
  kSampling,
  kTraining,
  kConfig,
  kUsage,
};

const char *ErrorKindName(ErrorKind kind);

// All library failures are reported as Error; kind() selects the category
// (and, in the CLI, the exit code).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ontotag

#endif  // ONTOTAG_ERROR_H_
