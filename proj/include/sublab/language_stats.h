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

#ifndef SUBLAB_LANGUAGE_STATS_H_
#define SUBLAB_LANGUAGE_STATS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "absl/status/statusor.h"
#include "sublab/normalizer.h"
#include "json.hpp"

namespace sublab {

// Word counts per language tag. Tags come from the caller (file names or a
// tagged stream); no language identification happens here.
struct LanguageDistribution {
  std::map<std::string, int64_t> per_language;
  int64_t total = 0;
  int64_t total_chars = 0;

  void AddSentence(const std::string& tag, std::string_view sentence,
                   const NormalizationConfig& cfg);
  std::map<std::string, double> Proportions() const;

  // {"per_language": {...}, "proportions": {...}, "total_chars": c,
  //  "total_words": n}
  nlohmann::json ToJson() const;
};

LanguageDistribution ComputeLanguageDistribution(
    std::span<const std::pair<std::string, std::string>> tagged_sentences,
    const NormalizationConfig& cfg);

// Two-column TSV: `lang \t sentence`.
absl::StatusOr<LanguageDistribution> LanguageDistributionFromTsv(
    std::istream& in, const NormalizationConfig& cfg);

// Directory of `<lang>.txt` files, one sentence per line.
absl::StatusOr<LanguageDistribution> LanguageDistributionFromDirectory(
    const std::filesystem::path& dir, const NormalizationConfig& cfg);

// A single file tagged with `tag`.
absl::StatusOr<LanguageDistribution> LanguageDistributionFromFile(
    const std::filesystem::path& path, const std::string& tag,
    const NormalizationConfig& cfg);

}  // namespace sublab

#endif  // SUBLAB_LANGUAGE_STATS_H_
