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

#ifndef SUBLAB_TRAINER_H_
#define SUBLAB_TRAINER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sublab/frequency_table.h"
#include "sublab/model.h"
#include "sublab/piece_table.h"

namespace sublab {

struct TrainerConfig {
  // Final number of entries, special tokens included.
  int target_vocab_size = 8000;
  // 0 selects min(1,000,000, 25 * target_vocab_size).
  int seed_size = 0;
  int max_piece_length = 16;
  double shrink_factor = 0.75;
  int em_iterations_per_round = 2;
  double character_coverage = 0.9995;
  std::vector<std::string> specials = DefaultSpecials();
  NormalizationConfig normalization;
  int num_threads = 1;

  absl::Status Validate() const;
  int EffectiveSeedSize() const;
  // Number of non-special pieces in the final model.
  int PieceBudget() const {
    return target_vocab_size - static_cast<int>(specials.size());
  }
};

struct SeedVocabulary {
  // Piece surface -> frequency-weighted occurrence count.
  std::map<std::string, int64_t> pieces;
  std::set<std::string> required_chars;

  // Initial table: log_prob proportional to the seed counts; single
  // characters from `required_chars` are flagged as required.
  PieceTable ToPieceTable() const;
};

// Words decoded to code points, kept in table order, with their counts.
struct TrainingCorpus {
  std::vector<std::string> surfaces;
  std::vector<std::u32string> words;
  std::vector<int64_t> counts;

  static TrainingCorpus FromTable(const WordFrequencyTable& table);
  size_t size() const { return words.size(); }
};

// (a) The most frequent characters covering `character_coverage` of the
// character mass (the boundary marker is always kept); (b) substrings of
// length 2..max_piece_length ranked by count * length, ties broken
// lexicographically, until the seed holds EffectiveSeedSize() pieces.
// Substring counts come from a suffix array over the unique words, weighted
// by word frequency. Substrings containing uncovered characters are skipped.
absl::StatusOr<SeedVocabulary> MakeSeedVocabulary(const WordFrequencyTable& table,
                                                  const TrainerConfig& cfg);

struct EmResult {
  PieceTable pieces;
  // sum_w count(w) * log Z(w) evaluated under the input table.
  double log_likelihood = 0.0;
};

// One E-step (forward-backward expected counts) and M-step (maximum-likelihood
// renormalization). Results do not depend on num_threads.
absl::StatusOr<EmResult> EmRound(const TrainingCorpus& corpus,
                                 const PieceTable& pieces, int num_threads = 1);
absl::StatusOr<EmResult> EmRound(const WordFrequencyTable& table,
                                 const PieceTable& pieces, int num_threads = 1);

// Per-piece pruning loss: sum over words whose Viterbi path uses the piece of
// count * (best score with it - best score without it). +inf when the word
// has no segmentation without the piece.
std::vector<double> PruneLosses(const TrainingCorpus& corpus,
                                const PieceTable& pieces, int num_threads = 1);

// Keeps required pieces plus the highest-loss removable pieces so that the
// result holds max(ceil(|pieces| * shrink_factor), PieceBudget()) pieces
// (always at least one fewer than the input), then renormalizes.
absl::StatusOr<PieceTable> PruneRound(const TrainingCorpus& corpus,
                                      const PieceTable& pieces,
                                      const TrainerConfig& cfg);
absl::StatusOr<PieceTable> PruneRound(const WordFrequencyTable& table,
                                      const PieceTable& pieces,
                                      const TrainerConfig& cfg);

struct TrainingSummary {
  int rounds = 0;
  double final_log_likelihood = 0.0;
  size_t seed_pieces = 0;
  size_t training_words = 0;
  // Unique words skipped because they contain uncovered characters.
  size_t dropped_words = 0;
};

using TrainingLog = std::function<void(const std::string&)>;

// Seed, then alternate EM and pruning until the pieces fit the budget, then
// refit with a final batch of EM iterations. The resulting model has exactly
// target_vocab_size entries; pieces are ordered by descending log_prob with
// lexicographic ties.
absl::StatusOr<SubwordModel> Train(const WordFrequencyTable& table,
                                   const TrainerConfig& cfg,
                                   const TrainingLog& log = nullptr,
                                   TrainingSummary* summary = nullptr);

}  // namespace sublab

#endif  // SUBLAB_TRAINER_H_
