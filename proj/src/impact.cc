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

#include "sublab/impact.h"

#include <algorithm>
#include <unordered_map>

#include "sublab/string_util.h"
#include "sublab/parallel.h"
#include "sublab/pearson.h"
#include "sublab/segmenter.h"

namespace sublab {
namespace {

std::string_view EntityType(std::string_view label) {
  if (label.size() > 2 && label[1] == '-' &&
      (label[0] == 'B' || label[0] == 'I' || label[0] == 'E' ||
       label[0] == 'S')) {
    return label.substr(2);
  }
  return label;
}

// Memoizes per-token fragmentation; tokens repeat heavily in real data.
class FragmentationCache {
 public:
  explicit FragmentationCache(const SubwordModel& model) : model_(model) {}
  int operator()(const std::string& token) {
    auto it = cache_.find(token);
    if (it != cache_.end()) return it->second;
    const int f = TokenFragmentation(token, model_);
    cache_.emplace(token, f);
    return f;
  }

 private:
  const SubwordModel& model_;
  std::unordered_map<std::string, int> cache_;
};

}  // namespace

bool IsEntityToken(std::string_view label) { return label != "O"; }

double ClassCounts::rate_pct() const {
  if (tokens == 0) return 0.0;
  return 100.0 * static_cast<double>(pieces - tokens) /
         static_cast<double>(tokens);
}

SegmentationStats ComputeSegmentationStats(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    int num_threads) {
  const auto shards = FixedShards(sentences.size());
  std::vector<ClassCounts> ne(shards.size());
  std::vector<ClassCounts> other(shards.size());
  ParallelFor(shards.size(), num_threads, [&](size_t s) {
    FragmentationCache frag(model);
    for (size_t i = shards[s].begin; i < shards[s].end; ++i) {
      const auto& sent = sentences[i];
      for (size_t t = 0; t < sent.tokens.size(); ++t) {
        ClassCounts& c = IsEntityToken(sent.gold[t]) ? ne[s] : other[s];
        c.tokens += 1;
        c.pieces += frag(sent.tokens[t]);
      }
    }
  });
  ClassCounts ne_total;
  ClassCounts other_total;
  for (size_t s = 0; s < shards.size(); ++s) {
    ne_total.tokens += ne[s].tokens;
    ne_total.pieces += ne[s].pieces;
    other_total.tokens += other[s].tokens;
    other_total.pieces += other[s].pieces;
  }
  SegmentationStats stats;
  for (auto [name, counts] : {std::pair{kEntityClass, ne_total},
                              std::pair{kNonEntityClass, other_total}}) {
    if (counts.tokens > 0) {
      stats.classes.emplace(std::string(name), counts);
    } else {
      stats.warnings.push_back(
          StrCat("class ", name, " has no tokens; omitted"));
    }
  }
  return stats;
}

std::vector<EntitySpan> ExtractEntitySpans(std::span<const std::string> labels) {
  std::vector<EntitySpan> spans;
  bool open = false;
  for (size_t i = 0; i < labels.size(); ++i) {
    const std::string& label = labels[i];
    if (!IsEntityToken(label)) {
      open = false;
      continue;
    }
    const std::string_view type = EntityType(label);
    const bool begins = label.starts_with("B-") || label.starts_with("S-");
    if (!open || begins || spans.back().type != type) {
      spans.push_back({i, i + 1, std::string(type)});
      open = true;
    } else {
      spans.back().end = i + 1;
    }
  }
  return spans;
}

std::string_view CorrelationUnitName(CorrelationUnit unit) {
  return unit == CorrelationUnit::kToken ? "token" : "entity";
}

absl::StatusOr<CorrelationUnit> ParseCorrelationUnit(std::string_view name) {
  if (name == "token") return CorrelationUnit::kToken;
  if (name == "entity") return CorrelationUnit::kEntity;
  return absl::InvalidArgumentError(
      StrCat("unknown unit \"", name, "\" (expected token or entity)"));
}

namespace {

absl::Status CheckPredictions(std::span<const LabeledSentence> sentences) {
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (!sentences[i].pred.has_value()) {
      return absl::FailedPreconditionError(
          StrCat("sentence ", i + 1, " has no predictions"));
    }
    if (sentences[i].pred->size() != sentences[i].gold.size()) {
      return absl::InvalidArgumentError(StrCat(
          "prediction alignment error at sentence ", i + 1));
    }
  }
  return absl::OkStatus();
}

void CollectSentence(const LabeledSentence& sent, CorrelationUnit unit,
                     FragmentationCache& frag,
                     std::vector<FragmentationSample>* out) {
  const auto& pred = *sent.pred;
  if (unit == CorrelationUnit::kToken) {
    for (size_t t = 0; t < sent.tokens.size(); ++t) {
      out->push_back({static_cast<double>(frag(sent.tokens[t])),
                      pred[t] != sent.gold[t] ? 1.0 : 0.0});
    }
    return;
  }
  for (const auto& span : ExtractEntitySpans(sent.gold)) {
    int64_t pieces = 0;
    bool miss = false;
    for (size_t t = span.begin; t < span.end; ++t) {
      pieces += frag(sent.tokens[t]);
      miss = miss || pred[t] != sent.gold[t];
    }
    out->push_back({static_cast<double>(pieces) /
                        static_cast<double>(span.end - span.begin),
                    miss ? 1.0 : 0.0});
  }
}

}  // namespace

absl::StatusOr<std::vector<FragmentationSample>> CollectFragmentationSamples(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    CorrelationUnit unit) {
  if (auto st = CheckPredictions(sentences); !st.ok()) return st;
  FragmentationCache frag(model);
  std::vector<FragmentationSample> samples;
  for (const auto& sent : sentences) CollectSentence(sent, unit, frag, &samples);
  return samples;
}

absl::StatusOr<CorrelationReport> ComputeFragmentationErrorCorrelation(
    std::span<const LabeledSentence> sentences, const SubwordModel& model,
    CorrelationUnit unit, int num_threads) {
  if (auto st = CheckPredictions(sentences); !st.ok()) return st;
  const auto shards = FixedShards(sentences.size());
  std::vector<PearsonAccumulator> partial(shards.size());
  ParallelFor(shards.size(), num_threads, [&](size_t s) {
    FragmentationCache frag(model);
    std::vector<FragmentationSample> samples;
    for (size_t i = shards[s].begin; i < shards[s].end; ++i) {
      samples.clear();
      CollectSentence(sentences[i], unit, frag, &samples);
      for (const auto& x : samples) partial[s].Add(x.fragmentation, x.error);
    }
  });
  PearsonAccumulator acc;
  for (const auto& p : partial) acc.Merge(p);

  CorrelationReport report;
  report.unit = unit;
  report.n = acc.n();
  report.mean_fragmentation = acc.mean_x();
  report.error_rate = acc.mean_y();
  report.pearson_r = acc.Correlation();
  if (!report.pearson_r.has_value()) {
    if (acc.n() < 2) {
      report.undefined_reason = "fewer than 2 samples";
    } else if (acc.variance_y() <= 0.0) {
      report.undefined_reason = "zero variance in label errors";
    } else {
      report.undefined_reason = "zero variance in fragmentation";
    }
  }
  return report;
}

nlohmann::json EmitReport(const SegmentationStats& stats,
                          const std::optional<CorrelationReport>& correlation,
                          const ModelMetadata& model) {
  nlohmann::json j;
  j["model"] = {{"vocab_size", model.vocab_size}};
  if (!model.path.empty()) j["model"]["path"] = model.path;
  j["rate_definition"] = "100*(pieces-tokens)/tokens";
  j["segmentation"] = nlohmann::json::object();
  for (const auto& [name, c] : stats.classes) {
    j["segmentation"][name] = {
        {"tokens", c.tokens}, {"pieces", c.pieces}, {"rate_pct", c.rate_pct()}};
  }
  if (!stats.warnings.empty()) j["warnings"] = stats.warnings;
  if (correlation.has_value()) {
    nlohmann::json c;
    c["unit"] = std::string(CorrelationUnitName(correlation->unit));
    c["n"] = correlation->n;
    c["error_rate"] = correlation->error_rate;
    c["mean_fragmentation"] = correlation->mean_fragmentation;
    if (correlation->pearson_r.has_value()) {
      c["pearson_r"] = *correlation->pearson_r;
    } else {
      c["pearson_r"] = "undefined";
      c["undefined_reason"] = correlation->undefined_reason;
    }
    j["correlation"] = std::move(c);
  }
  return j;
}

nlohmann::json CombineReports(std::vector<nlohmann::json> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const nlohmann::json& a, const nlohmann::json& b) {
                     return a["model"]["vocab_size"].get<int>() <
                            b["model"]["vocab_size"].get<int>();
                   });
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : reports) arr.push_back(std::move(r));
  return arr;
}

std::string CanonicalJson(const nlohmann::json& j) { return j.dump(); }

}  // namespace sublab
