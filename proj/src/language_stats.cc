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

#include "sublab/language_stats.h"

#include <algorithm>
#include <fstream>
#include <vector>

#include "sublab/string_util.h"
#include "sublab/pretokenizer.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

absl::Status AddLines(std::istream& in, const std::string& tag,
                      const std::string& source,
                      const NormalizationConfig& cfg,
                      LanguageDistribution* dist) {
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto bad = FindInvalidUtf8(line); bad.has_value()) {
      return absl::InvalidArgumentError(
          StrCat(source, ":", line_number, ": invalid UTF-8 at byte ",
                       *bad, " of the line"));
    }
    dist->AddSentence(tag, line, cfg);
  }
  if (in.bad()) {
    return absl::DataLossError(
        StrCat(source, ": I/O error reading line ", line_number + 1));
  }
  return absl::OkStatus();
}

}  // namespace

void LanguageDistribution::AddSentence(const std::string& tag,
                                       std::string_view sentence,
                                       const NormalizationConfig& cfg) {
  const auto words = Pretokenize(NormalizeText(sentence, cfg));
  // Tags are registered even for empty sentences.
  auto& count = per_language[tag];
  count += static_cast<int64_t>(words.size());
  total += static_cast<int64_t>(words.size());
  for (const auto& w : words) total_chars += static_cast<int64_t>(w.char_len);
}

std::map<std::string, double> LanguageDistribution::Proportions() const {
  std::map<std::string, double> out;
  if (total == 0) return out;
  for (const auto& [tag, count] : per_language) {
    out[tag] = static_cast<double>(count) / static_cast<double>(total);
  }
  return out;
}

nlohmann::json LanguageDistribution::ToJson() const {
  nlohmann::json j;
  j["total_words"] = total;
  j["total_chars"] = total_chars;
  j["per_language"] = nlohmann::json::object();
  for (const auto& [tag, count] : per_language) j["per_language"][tag] = count;
  j["proportions"] = nlohmann::json::object();
  for (const auto& [tag, p] : Proportions()) j["proportions"][tag] = p;
  return j;
}

LanguageDistribution ComputeLanguageDistribution(
    std::span<const std::pair<std::string, std::string>> tagged_sentences,
    const NormalizationConfig& cfg) {
  LanguageDistribution dist;
  for (const auto& [tag, sentence] : tagged_sentences) {
    dist.AddSentence(tag, sentence, cfg);
  }
  return dist;
}

absl::StatusOr<LanguageDistribution> LanguageDistributionFromTsv(
    std::istream& in, const NormalizationConfig& cfg) {
  LanguageDistribution dist;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (auto bad = FindInvalidUtf8(line); bad.has_value()) {
      return absl::InvalidArgumentError(StrCat(
          "line ", line_number, ": invalid UTF-8 at byte ", *bad));
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      return absl::InvalidArgumentError(StrCat(
          "line ", line_number, ": expected `lang<TAB>sentence`"));
    }
    dist.AddSentence(line.substr(0, tab), std::string_view(line).substr(tab + 1),
                     cfg);
  }
  if (in.bad()) {
    return absl::DataLossError(
        StrCat("I/O error reading line ", line_number + 1));
  }
  return dist;
}

absl::StatusOr<LanguageDistribution> LanguageDistributionFromDirectory(
    const std::filesystem::path& dir, const NormalizationConfig& cfg) {
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (ec) {
    return absl::NotFoundError(
        StrCat("cannot list ", dir.string(), ": ", ec.message()));
  }
  std::sort(files.begin(), files.end());
  LanguageDistribution dist;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      return absl::NotFoundError(StrCat("cannot open ", file.string()));
    }
    auto st = AddLines(in, file.stem().string(), file.string(), cfg, &dist);
    if (!st.ok()) return st;
  }
  return dist;
}

absl::StatusOr<LanguageDistribution> LanguageDistributionFromFile(
    const std::filesystem::path& path, const std::string& tag,
    const NormalizationConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path.string()));
  LanguageDistribution dist;
  auto st = AddLines(in, tag, path.string(), cfg, &dist);
  if (!st.ok()) return st;
  return dist;
}

}  // namespace sublab
