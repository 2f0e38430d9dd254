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

#ifndef SUBLAB_SEGMENTER_H_
#define SUBLAB_SEGMENTER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "sublab/model.h"
#include "sublab/pretokenizer.h"

namespace sublab {

struct Segmentation {
  std::vector<std::string> pieces;
  std::vector<int> ids;
  // Sum of piece log-probs; unknown runs score unk_log_prob() per character.
  double score = 0.0;
};

// Maximum-likelihood segmentation of one pre-tokenized word. Ties prefer
// fewer pieces, then the lexicographically smallest piece sequence. Each
// maximal run of characters that no piece covers becomes a single [UNK].
Segmentation ViterbiSegment(std::string_view word, const SubwordModel& model);

struct WordSpan {
  size_t start;  // index of the word's first piece
  size_t count;  // number of pieces, >= 1

  friend bool operator==(const WordSpan&, const WordSpan&) = default;
};

struct Encoding {
  std::vector<std::string> pieces;
  std::vector<int> ids;
  std::vector<WordSpan> word_boundaries;

  // {"ids":[...],"pieces":[...],"word_boundaries":[[start,count],...]}
  nlohmann::json ToJson() const;
};

// normalize -> pretokenize -> per-word Viterbi.
Encoding Encode(std::string_view text, const SubwordModel& model);

// Surfaces joined, markers turned into spaces, one leading space stripped.
// [UNK] decodes to U+FFFD; other special tokens decode to nothing.
absl::StatusOr<std::string> Decode(std::span<const int> ids,
                                   const SubwordModel& model);

// Number of pieces the word is split into.
int Fragmentation(std::string_view word, const SubwordModel& model);

// Pieces produced for a single token treated as word-initial; at least 1.
int TokenFragmentation(std::string_view token, const SubwordModel& model);

}  // namespace sublab

#endif  // SUBLAB_SEGMENTER_H_
