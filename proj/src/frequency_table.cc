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

#include "sublab/frequency_table.h"

#include <random>
#include <unordered_map>

#include "sublab/string_util.h"
#include "sublab/parallel.h"
#include "sublab/pretokenizer.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

constexpr size_t kBatchLines = 1 << 15;

// Reads lines and validates them, tracking line number and byte offset for
// diagnostics.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Returns false at end of input. Errors are surfaced through `status`.
  bool Next(std::string* line, absl::Status* status) {
    if (!std::getline(in_, *line)) {
      if (in_.bad()) {
        *status = absl::DataLossError(
            StrCat("I/O error reading line ", line_number_ + 1));
      }
      return false;
    }
    ++line_number_;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    if (auto bad = FindInvalidUtf8(*line); bad.has_value()) {
      *status = absl::InvalidArgumentError(
          StrCat("line ", line_number_, ": invalid UTF-8 at byte offset ",
                       offset_ + *bad));
      return false;
    }
    offset_ += line->size() + 1;
    return true;
  }

 private:
  std::istream& in_;
  size_t line_number_ = 0;
  size_t offset_ = 0;
};

}  // namespace

void WordFrequencyTable::Add(std::string_view surface, int64_t count) {
  if (count <= 0 || surface.empty()) return;
  auto it = entries_.find(surface);
  if (it == entries_.end()) {
    entries_.emplace(std::string(surface), count);
  } else {
    it->second += count;
  }
  total_words_ += count;
  total_chars_ += count * static_cast<int64_t>(CharLength(surface));
}

void WordFrequencyTable::Merge(const WordFrequencyTable& other) {
  for (const auto& [surface, count] : other.entries_) Add(surface, count);
}

int64_t WordFrequencyTable::count(std::string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? 0 : it->second;
}

WordFrequencyTable CountWords(std::span<const std::string> sentences,
                              const NormalizationConfig& cfg,
                              int num_threads) {
  const auto shards = FixedShards(sentences.size());
  std::vector<std::unordered_map<std::string, int64_t>> partial(shards.size());
  ParallelFor(shards.size(), num_threads, [&](size_t s) {
    auto& counts = partial[s];
    for (size_t i = shards[s].begin; i < shards[s].end; ++i) {
      for (auto& word : Pretokenize(NormalizeText(sentences[i], cfg))) {
        ++counts[std::move(word.surface)];
      }
    }
  });
  // Integer sums commute, so the merge order does not affect the result.
  WordFrequencyTable table;
  for (const auto& counts : partial) {
    for (const auto& [surface, count] : counts) table.Add(surface, count);
  }
  return table;
}

absl::StatusOr<std::vector<std::string>> ReservoirSampleLines(
    std::istream& in, size_t k, uint64_t seed) {
  std::vector<std::string> reservoir;
  std::mt19937_64 rng(seed);
  LineReader reader(in);
  std::string line;
  absl::Status status;
  uint64_t seen = 0;
  while (reader.Next(&line, &status)) {
    if (reservoir.size() < k) {
      reservoir.push_back(line);
    } else {
      const uint64_t j = rng() % (seen + 1);
      if (j < k) reservoir[j] = line;
    }
    ++seen;
  }
  if (!status.ok()) return status;
  return reservoir;
}

absl::StatusOr<WordFrequencyTable> BuildFrequencyTable(
    std::istream& in, const FrequencyTableOptions& options) {
  if (options.max_sentences.has_value()) {
    auto sample = ReservoirSampleLines(in, *options.max_sentences,
                                       options.sample_seed);
    if (!sample.ok()) return sample.status();
    return CountWords(*sample, options.normalization, options.num_threads);
  }
  WordFrequencyTable table;
  LineReader reader(in);
  std::vector<std::string> batch;
  batch.reserve(kBatchLines);
  std::string line;
  absl::Status status;
  while (reader.Next(&line, &status)) {
    batch.push_back(std::move(line));
    if (batch.size() == kBatchLines) {
      table.Merge(CountWords(batch, options.normalization, options.num_threads));
      batch.clear();
    }
  }
  if (!status.ok()) return status;
  table.Merge(CountWords(batch, options.normalization, options.num_threads));
  return table;
}

absl::StatusOr<WordFrequencyTable> BuildFrequencyTable(
    std::span<const std::string> sentences,
    const FrequencyTableOptions& options) {
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (auto bad = FindInvalidUtf8(sentences[i]); bad.has_value()) {
      return absl::InvalidArgumentError(StrCat(
          "sentence ", i + 1, ": invalid UTF-8 at byte offset ", *bad));
    }
  }
  if (!options.max_sentences.has_value() ||
      *options.max_sentences >= sentences.size()) {
    return CountWords(sentences, options.normalization, options.num_threads);
  }
  std::vector<std::string> reservoir;
  const size_t k = *options.max_sentences;
  std::mt19937_64 rng(options.sample_seed);
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (reservoir.size() < k) {
      reservoir.push_back(sentences[i]);
    } else {
      const uint64_t j = rng() % (i + 1);
      if (j < k) reservoir[j] = sentences[i];
    }
  }
  return CountWords(reservoir, options.normalization, options.num_threads);
}

}  // namespace sublab
