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

#include "sublab/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "sublab/string_util.h"
#include "sublab/lattice.h"
#include "sublab/parallel.h"
#include "sublab/piece_trie.h"
#include "sublab/suffix_array.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

constexpr uint32_t kSeparator = 0xFFFFFFFFu;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  uint64_t score;
  std::string surface;
  int64_t count;
};

// Heap order with the weakest candidate on top.
struct WeakerOnTop {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.score != b.score) return a.score > b.score;
    return a.surface < b.surface;
  }
};

std::map<char32_t, int64_t> CountChars(const WordFrequencyTable& table) {
  std::map<char32_t, int64_t> counts;
  for (const auto& [surface, count] : table.entries()) {
    for (char32_t c : DecodeUtf8(surface)) counts[c] += count;
  }
  return counts;
}

bool AllCovered(std::u32string_view word, const std::set<char32_t>& covered) {
  return std::all_of(word.begin(), word.end(),
                     [&](char32_t c) { return covered.contains(c); });
}

}  // namespace

absl::Status TrainerConfig::Validate() const {
  if (target_vocab_size <= static_cast<int>(specials.size())) {
    return absl::InvalidArgumentError(StrCat(
        "target_vocab_size ", target_vocab_size,
        " must exceed the number of special tokens (", specials.size(), ")"));
  }
  if (seed_size < 0) return absl::InvalidArgumentError("seed_size must be >= 0");
  if (max_piece_length < 1) {
    return absl::InvalidArgumentError("max_piece_length must be >= 1");
  }
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
    return absl::InvalidArgumentError("shrink_factor must lie in (0, 1)");
  }
  if (em_iterations_per_round < 1) {
    return absl::InvalidArgumentError("em_iterations_per_round must be >= 1");
  }
  if (!(character_coverage > 0.0 && character_coverage <= 1.0)) {
    return absl::InvalidArgumentError("character_coverage must lie in (0, 1]");
  }
  if (num_threads < 1) return absl::InvalidArgumentError("num_threads must be >= 1");
  return absl::OkStatus();
}

int TrainerConfig::EffectiveSeedSize() const {
  if (seed_size > 0) return seed_size;
  return static_cast<int>(
      std::min<int64_t>(1'000'000, int64_t{25} * target_vocab_size));
}

PieceTable SeedVocabulary::ToPieceTable() const {
  PieceTable table;
  std::vector<double> counts;
  for (const auto& [surface, count] : pieces) {
    table.pieces.push_back({surface, 0.0, required_chars.contains(surface)});
    counts.push_back(static_cast<double>(count));
  }
  SetLogProbsFromCounts(counts, &table);
  return table;
}

TrainingCorpus TrainingCorpus::FromTable(const WordFrequencyTable& table) {
  TrainingCorpus corpus;
  for (const auto& [surface, count] : table.entries()) {
    corpus.surfaces.push_back(surface);
    corpus.words.push_back(DecodeUtf8(surface));
    corpus.counts.push_back(count);
  }
  return corpus;
}

absl::StatusOr<SeedVocabulary> MakeSeedVocabulary(const WordFrequencyTable& table,
                                                  const TrainerConfig& cfg) {
  if (table.empty()) return absl::InvalidArgumentError("empty corpus");
  if (auto st = cfg.Validate(); !st.ok()) return st;

  // (a) Characters by descending mass until the coverage threshold is met.
  const auto char_counts = CountChars(table);
  std::vector<std::pair<char32_t, int64_t>> chars(char_counts.begin(),
                                                  char_counts.end());
  std::stable_sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  int64_t total = 0;
  for (const auto& [c, n] : chars) total += n;
  const double threshold = cfg.character_coverage * static_cast<double>(total);
  SeedVocabulary seed;
  std::set<char32_t> covered;
  int64_t cumulative = 0;
  for (const auto& [c, n] : chars) {
    if (static_cast<double>(cumulative) >= threshold) break;
    covered.insert(c);
    cumulative += n;
  }
  if (auto it = char_counts.find(kMarker); it != char_counts.end()) {
    covered.insert(kMarker);
  }
  for (char32_t c : covered) {
    std::string s;
    AppendUtf8(c, &s);
    seed.pieces[s] = char_counts.at(c);
    seed.required_chars.insert(std::move(s));
  }

  // (b) Substrings of the covered unique words, concatenated with separators.
  std::vector<uint32_t> text;
  std::vector<int64_t> weight;
  std::vector<int32_t> remaining;
  for (const auto& [surface, count] : table.entries()) {
    const std::u32string word = DecodeUtf8(surface);
    if (!AllCovered(word, covered)) continue;
    for (size_t i = 0; i < word.size(); ++i) {
      text.push_back(static_cast<uint32_t>(word[i]));
      weight.push_back(count);
      remaining.push_back(static_cast<int32_t>(word.size() - i));
    }
    text.push_back(kSeparator);
    weight.push_back(0);
    remaining.push_back(0);
  }
  const auto sa = BuildSuffixArray(text);
  const auto lcp = BuildLcpArray(text, sa);

  const int64_t budget = std::max<int64_t>(
      0, int64_t{cfg.EffectiveSeedSize()} - static_cast<int64_t>(covered.size()));
  std::priority_queue<Candidate, std::vector<Candidate>, WeakerOnTop> heap;
  auto surface_at = [&](int32_t pos, int32_t len) {
    std::string s;
    for (int32_t k = 0; k < len; ++k) AppendUtf8(text[pos + k], &s);
    return s;
  };
  const auto n = static_cast<int32_t>(text.size());
  for (int32_t len = 2; len <= cfg.max_piece_length && budget > 0; ++len) {
    int32_t r = 0;
    while (r < n) {
      if (remaining[sa[r]] < len) {
        ++r;
        continue;
      }
      const int32_t first = r;
      int64_t count = weight[sa[r]];
      ++r;
      while (r < n && lcp[r] >= len) count += weight[sa[r++]];
      const uint64_t score = static_cast<uint64_t>(count) * len;
      if (static_cast<int64_t>(heap.size()) == budget &&
          score < heap.top().score) {
        continue;
      }
      Candidate cand{score, surface_at(sa[first], len), count};
      if (static_cast<int64_t>(heap.size()) < budget) {
        heap.push(std::move(cand));
      } else if (WeakerOnTop()(cand, heap.top())) {
        heap.pop();
        heap.push(std::move(cand));
      }
    }
  }
  while (!heap.empty()) {
    seed.pieces[heap.top().surface] = heap.top().count;
    heap.pop();
  }
  return seed;
}

absl::StatusOr<EmResult> EmRound(const TrainingCorpus& corpus,
                                 const PieceTable& pieces, int num_threads) {
  const PieceTrie trie(pieces.DecodedSurfaces());
  const auto log_probs = pieces.LogProbs();
  const auto shards = FixedShards(corpus.size());
  std::vector<std::vector<double>> expected(shards.size());
  std::vector<double> loglik(shards.size(), 0.0);
  constexpr size_t kOk = SIZE_MAX;
  std::vector<size_t> failed(shards.size(), kOk);

  ParallelFor(shards.size(), num_threads, [&](size_t s) {
    expected[s].assign(pieces.size(), 0.0);
    for (size_t i = shards[s].begin; i < shards[s].end; ++i) {
      const auto lattice =
          SegmentationLattice::Build(corpus.words[i], trie, log_probs);
      const auto count = static_cast<double>(corpus.counts[i]);
      const double log_z = lattice.AccumulateExpectedCounts(count, expected[s]);
      if (log_z == -kInf) {
        failed[s] = i;
        return;
      }
      loglik[s] += count * log_z;
    }
  });

  EmResult result;
  std::vector<double> total(pieces.size(), 0.0);
  for (size_t s = 0; s < shards.size(); ++s) {
    if (failed[s] != kOk) {
      return absl::FailedPreconditionError(
          StrCat("word \"", corpus.surfaces[failed[s]],
                       "\" has no segmentation under the current pieces"));
    }
    for (size_t p = 0; p < total.size(); ++p) total[p] += expected[s][p];
    result.log_likelihood += loglik[s];
  }
  result.pieces = pieces;
  SetLogProbsFromCounts(total, &result.pieces);
  ++result.pieces.generation;
  return result;
}

absl::StatusOr<EmResult> EmRound(const WordFrequencyTable& table,
                                 const PieceTable& pieces, int num_threads) {
  return EmRound(TrainingCorpus::FromTable(table), pieces, num_threads);
}

std::vector<double> PruneLosses(const TrainingCorpus& corpus,
                                const PieceTable& pieces, int num_threads) {
  const PieceTrie trie(pieces.DecodedSurfaces());
  const auto log_probs = pieces.LogProbs();
  const auto shards = FixedShards(corpus.size());
  std::vector<std::vector<double>> partial(shards.size());

  ParallelFor(shards.size(), num_threads, [&](size_t s) {
    partial[s].assign(pieces.size(), 0.0);
    std::vector<int32_t> used;
    for (size_t i = shards[s].begin; i < shards[s].end; ++i) {
      const auto lattice =
          SegmentationLattice::Build(corpus.words[i], trie, log_probs);
      const auto best = lattice.Viterbi();
      if (!best.found) continue;
      used.clear();
      for (uint32_t e : best.edges) used.push_back(lattice.edges()[e].piece_id);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      const auto count = static_cast<double>(corpus.counts[i]);
      for (int32_t p : used) {
        const auto alt = lattice.Viterbi(p);
        partial[s][p] += alt.found ? count * (best.score - alt.score) : kInf;
      }
    }
  });

  std::vector<double> loss(pieces.size(), 0.0);
  for (const auto& part : partial) {
    for (size_t p = 0; p < loss.size(); ++p) loss[p] += part[p];
  }
  return loss;
}

absl::StatusOr<PieceTable> PruneRound(const TrainingCorpus& corpus,
                                      const PieceTable& pieces,
                                      const TrainerConfig& cfg) {
  const size_t n = pieces.size();
  const auto budget = static_cast<size_t>(std::max(0, cfg.PieceBudget()));
  if (n <= budget) {
    return absl::FailedPreconditionError(StrCat(
        "nothing to prune: ", n, " pieces already fit the budget of ", budget));
  }
  size_t target = std::max<size_t>(
      static_cast<size_t>(std::ceil(static_cast<double>(n) * cfg.shrink_factor)),
      budget);
  target = std::min(target, n - 1);

  std::vector<size_t> required;
  std::vector<size_t> removable;
  for (size_t i = 0; i < n; ++i) {
    (pieces.pieces[i].required ? required : removable).push_back(i);
  }
  if (required.size() > budget) {
    return absl::InvalidArgumentError(StrCat(
        "vocabulary floor exceeds target: ", required.size(),
        " required pieces, room for ", budget));
  }

  const auto loss = PruneLosses(corpus, pieces, cfg.num_threads);
  std::sort(removable.begin(), removable.end(), [&](size_t a, size_t b) {
    if (loss[a] != loss[b]) return loss[a] > loss[b];
    const double la = pieces.pieces[a].log_prob;
    const double lb = pieces.pieces[b].log_prob;
    if (la != lb) return la > lb;
    return pieces.pieces[a].surface < pieces.pieces[b].surface;
  });
  removable.resize(target - required.size());

  std::vector<size_t> keep = std::move(required);
  keep.insert(keep.end(), removable.begin(), removable.end());
  std::sort(keep.begin(), keep.end());

  PieceTable out;
  out.generation = pieces.generation + 1;
  out.pieces.reserve(keep.size());
  for (size_t i : keep) out.pieces.push_back(pieces.pieces[i]);
  Renormalize(&out);
  return out;
}

absl::StatusOr<PieceTable> PruneRound(const WordFrequencyTable& table,
                                      const PieceTable& pieces,
                                      const TrainerConfig& cfg) {
  return PruneRound(TrainingCorpus::FromTable(table), pieces, cfg);
}

absl::StatusOr<SubwordModel> Train(const WordFrequencyTable& table,
                                   const TrainerConfig& cfg,
                                   const TrainingLog& log,
                                   TrainingSummary* summary) {
  if (auto st = cfg.Validate(); !st.ok()) return st;
  auto seed_or = MakeSeedVocabulary(table, cfg);
  if (!seed_or.ok()) return seed_or.status();
  const SeedVocabulary& seed = *seed_or;

  const auto budget = static_cast<size_t>(cfg.PieceBudget());
  if (seed.required_chars.size() > budget) {
    return absl::InvalidArgumentError(StrCat(
        "vocabulary floor exceeds target: ", seed.required_chars.size(),
        " required characters + ", cfg.specials.size(),
        " special tokens > ", cfg.target_vocab_size));
  }
  if (seed.pieces.size() < budget) {
    return absl::InvalidArgumentError(StrCat(
        "target vocabulary size ", cfg.target_vocab_size,
        " exceeds the corpus: only ", seed.pieces.size(),
        " candidate pieces + ", cfg.specials.size(), " special tokens"));
  }

  // Words with uncovered characters have no lattice path; they are left to the
  // segmenter's unknown fallback.
  TrainingCorpus corpus;
  size_t dropped = 0;
  for (const auto& [surface, count] : table.entries()) {
    bool ok = true;
    std::u32string word = DecodeUtf8(surface);
    std::string c;
    for (char32_t ch : word) {
      c.clear();
      AppendUtf8(ch, &c);
      if (!seed.required_chars.contains(c)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++dropped;
      continue;
    }
    corpus.surfaces.push_back(surface);
    corpus.words.push_back(std::move(word));
    corpus.counts.push_back(count);
  }
  if (corpus.size() == 0) return absl::InvalidArgumentError("empty corpus");

  PieceTable pieces = seed.ToPieceTable();
  double loglik = 0.0;
  int round = 0;
  auto run_em = [&]() -> absl::Status {
    for (int it = 0; it < cfg.em_iterations_per_round; ++it) {
      auto em = EmRound(corpus, pieces, cfg.num_threads);
      if (!em.ok()) return em.status();
      pieces = std::move(em->pieces);
      loglik = em->log_likelihood;
    }
    return absl::OkStatus();
  };
  auto emit = [&] {
    if (log) {
      log(fmt::format("round={} vocab={} loglik={:.6f}", round,
                          pieces.size() + cfg.specials.size(), loglik));
    }
  };

  while (pieces.size() > budget) {
    ++round;
    if (auto st = run_em(); !st.ok()) return st;
    auto pruned = PruneRound(corpus, pieces, cfg);
    if (!pruned.ok()) return pruned.status();
    pieces = std::move(*pruned);
    emit();
  }
  ++round;
  if (auto st = run_em(); !st.ok()) return st;
  emit();

  std::sort(pieces.pieces.begin(), pieces.pieces.end(),
            [](const Piece& a, const Piece& b) {
              if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
              return a.surface < b.surface;
            });
  if (summary != nullptr) {
    summary->rounds = round;
    summary->final_log_likelihood = loglik;
    summary->seed_pieces = seed.pieces.size();
    summary->training_words = corpus.size();
    summary->dropped_words = dropped;
  }
  return SubwordModel::Create(cfg.specials, std::move(pieces), cfg.normalization);
}

}  // namespace sublab
