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

#ifndef SUBLAB_PIECE_TABLE_H_
#define SUBLAB_PIECE_TABLE_H_

#include <span>
#include <string>
#include <vector>

namespace sublab {

struct Piece {
  std::string surface;
  double log_prob = 0.0;
  // Single-character pieces guaranteeing coverage; never pruned.
  bool required = false;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Piece inventory with unigram log-probabilities. The index of a piece in
// `pieces` is its local id.
struct PieceTable {
  std::vector<Piece> pieces;
  int generation = 0;

  size_t size() const { return pieces.size(); }
  double ProbabilityMass() const;
  std::vector<double> LogProbs() const;
  std::vector<std::u32string> DecodedSurfaces() const;
};

// Counts below this floor are clamped before normalization so that every
// log-probability stays finite.
inline constexpr double kMinExpectedCount = 1e-10;

// Maximum-likelihood normalization: log_prob[i] = log(c[i] / sum(c)).
void SetLogProbsFromCounts(std::span<const double> counts, PieceTable* table);

// Shifts log_probs so that the probabilities sum to one.
void Renormalize(PieceTable* table);

}  // namespace sublab

#endif  // SUBLAB_PIECE_TABLE_H_
