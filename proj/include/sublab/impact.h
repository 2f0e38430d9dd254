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

#ifndef SUBLAB_IMPACT_H_
#define SUBLAB_IMPACT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "sublab/conll.h"
#include "sublab/model.h"

namespace sublab {

inline constexpr std::string_view kEntityClass = "NE";
inline constexpr std::string_view kNonEntityClass = "NotNE";

// True iff the label is not "O".
bool IsEntityToken(std::string_view label);

struct ClassCounts {
  int64_t tokens = 0;
  int64_t pieces = 0;
  // 100 * (pieces - tokens) / tokens.
  double rate_pct() const;
};

struct SegmentationStats {
  // Keyed by kEntityClass / kNonEntityClass; classes without tokens are
  // omitted and reported in `warnings`.
  std::map<std::string, ClassCounts, std::less<>> classes;
  std::vector<std::string> warnings;
};

// Every token is segmented as a word-initial word; counts are bucketed by the
// gold label.
SegmentationStats ComputeSegmentationStats(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    int num_threads = 1);

struct EntitySpan {
  size_t begin;
  size_t end;  // exclusive
  std::string type;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Maximal runs of non-O gold labels. A B- label or a type change starts a
// new span; an I- label after O (malformed BIO) also starts one.
std::vector<EntitySpan> ExtractEntitySpans(std::span<const std::string> labels);

enum class CorrelationUnit { kToken, kEntity };
std::string_view CorrelationUnitName(CorrelationUnit unit);
absl::StatusOr<CorrelationUnit> ParseCorrelationUnit(std::string_view name);

// (x, y) observations: x = fragmentation (pieces, or mean pieces per token for
// entity spans), y = 1 if the prediction mismatches the gold label (any token
// of the span for entities), else 0.
struct FragmentationSample {
  double fragmentation;
  double error;
};

absl::StatusOr<std::vector<FragmentationSample>> CollectFragmentationSamples(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    CorrelationUnit unit);

struct CorrelationReport {
  CorrelationUnit unit = CorrelationUnit::kToken;
  int64_t n = 0;
  // Unset when undefined (n < 2 or zero variance); never coerced to 0.
  std::optional<double> pearson_r;
  std::string undefined_reason;
  double mean_fragmentation = 0.0;
  double error_rate = 0.0;
};

// Requires predictions on every sentence.
absl::StatusOr<CorrelationReport> ComputeFragmentationErrorCorrelation(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    CorrelationUnit unit, int num_threads = 1);

struct ModelMetadata {
  int vocab_size = 0;
  std::string path;  // omitted from the report when empty
};

// {"model":{"vocab_size":N},"rate_definition":...,
//  "segmentation":{"NE":{"pieces":p,"rate_pct":r,"tokens":t},"NotNE":{...}},
//  "correlation":{"error_rate":e,"mean_fragmentation":m,"n":n,
//                 "pearson_r":r|"undefined","unit":"token"}}
// "correlation" is present only when a report is supplied.
nlohmann::json EmitReport(const SegmentationStats& stats,
                          const std::optional<CorrelationReport>& correlation,
                          const ModelMetadata& model);

// Sorts reports by model.vocab_size (ascending) into a JSON array.
nlohmann::json CombineReports(std::vector<nlohmann::json> reports);

// Sorted keys, shortest round-trip floats, no whitespace.
std::string CanonicalJson(const nlohmann::json& j);

}  // namespace sublab

#endif  // SUBLAB_IMPACT_H_
