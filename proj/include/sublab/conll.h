// Copyright 2026 The Sublab Authors
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

#ifndef SUBLAB_CONLL_H_
#define SUBLAB_CONLL_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace sublab {

// One sentence of a token-classification file. BIO well-formedness is not
// required: real tagger output violates it.
struct LabeledSentence {
  std::vector<std::string> tokens;
  std::vector<std::string> gold;
  std::optional<std::vector<std::string>> pred;
};

// Whitespace-separated columns, blank lines between sentences, "-DOCSTART-"
// lines skipped. Negative column indices count from the end (-1 = last).
// `source` prefixes error messages.
absl::StatusOr<std::vector<LabeledSentence>> ParseConll(
    std::istream& in, int token_column, int label_column,
    std::string_view source = "<input>");

absl::StatusOr<std::vector<LabeledSentence>> ParseConllFile(
    const std::filesystem::path& path, int token_column, int label_column);

// Zips the labels of `predictions` (same sentence/token shape) into
// `gold[i].pred`. Errors name the first misaligned sentence (1-based).
absl::Status AttachPredictions(std::span<const LabeledSentence> predictions,
                               std::vector<LabeledSentence>* gold);

}  // namespace sublab

#endif  // SUBLAB_CONLL_H_
