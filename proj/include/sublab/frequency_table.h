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

#ifndef SUBLAB_FREQUENCY_TABLE_H_
#define SUBLAB_FREQUENCY_TABLE_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sublab/normalizer.h"

namespace sublab {

// Unique pre-tokenized words with their corpus counts. Iteration is
// lexicographic by surface.
class WordFrequencyTable {
 public:
  using Map = std::map<std::string, int64_t, std::less<>>;

  void Add(std::string_view surface, int64_t count = 1);
  void Merge(const WordFrequencyTable& other);

  const Map& entries() const { return entries_; }
  int64_t total_words() const { return total_words_; }
  int64_t total_chars() const { return total_chars_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int64_t count(std::string_view surface) const;

  friend bool operator==(const WordFrequencyTable&,
                         const WordFrequencyTable&) = default;

 private:
  Map entries_;
  int64_t total_words_ = 0;
  int64_t total_chars_ = 0;
};

struct FrequencyTableOptions {
  NormalizationConfig normalization;
  // Reservoir-sample this many sentences instead of using all of them.
  std::optional<size_t> max_sentences;
  uint64_t sample_seed = 0;
  int num_threads = 1;
};

// Normalizes and pre-tokenizes each sentence and counts the words.
WordFrequencyTable CountWords(std::span<const std::string> sentences,
                              const NormalizationConfig& cfg,
                              int num_threads = 1);

// Reads one sentence per line. Malformed UTF-8 is reported with the line
// number and absolute byte offset.
absl::StatusOr<WordFrequencyTable> BuildFrequencyTable(
    std::istream& in, const FrequencyTableOptions& options);

absl::StatusOr<WordFrequencyTable> BuildFrequencyTable(
    std::span<const std::string> sentences,
    const FrequencyTableOptions& options);

// Deterministic reservoir sample (Algorithm R over a 64-bit Mersenne
// Twister) of at most k lines. Lines are validated as UTF-8.
absl::StatusOr<std::vector<std::string>> ReservoirSampleLines(
    std::istream& in, size_t k, uint64_t seed);

}  // namespace sublab

#endif  // SUBLAB_FREQUENCY_TABLE_H_
