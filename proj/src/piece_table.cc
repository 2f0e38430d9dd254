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

#include "sublab/piece_table.h"

#include <algorithm>
#include <cmath>

#include "sublab/utf8.h"

namespace sublab {

double PieceTable::ProbabilityMass() const {
  double mass = 0.0;
  for (const auto& p : pieces) mass += std::exp(p.log_prob);
  return mass;
}

std::vector<double> PieceTable::LogProbs() const {
  std::vector<double> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back(p.log_prob);
  return out;
}

std::vector<std::u32string> PieceTable::DecodedSurfaces() const {
  std::vector<std::u32string> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back(DecodeUtf8(p.surface));
  return out;
}

void SetLogProbsFromCounts(std::span<const double> counts, PieceTable* table) {
  double total = 0.0;
  for (double c : counts) total += std::max(c, kMinExpectedCount);
  const double log_total = std::log(total);
  for (size_t i = 0; i < table->pieces.size(); ++i) {
    table->pieces[i].log_prob =
        std::log(std::max(counts[i], kMinExpectedCount)) - log_total;
  }
}

void Renormalize(PieceTable* table) {
  if (table->pieces.empty()) return;
  double max_lp = -INFINITY;
  for (const auto& p : table->pieces) max_lp = std::max(max_lp, p.log_prob);
  double sum = 0.0;
  for (const auto& p : table->pieces) sum += std::exp(p.log_prob - max_lp);
  const double log_z = max_lp + std::log(sum);
  for (auto& p : table->pieces) p.log_prob = std::min(0.0, p.log_prob - log_z);
}

}  // namespace sublab
