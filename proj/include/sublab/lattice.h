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

#ifndef SUBLAB_LATTICE_H_
#define SUBLAB_LATTICE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublab/piece_table.h"
#include "sublab/piece_trie.h"

namespace sublab {

// Edge id used for single-character unknown-text fallback edges.
inline constexpr int32_t kUnknownEdgeId = -1;
// Passed to Viterbi() when no piece is excluded.
inline constexpr int32_t kNoExclusion = -2;

struct LatticeEdge {
  uint32_t start;  // code-point offsets, end exclusive
  uint32_t end;
  int32_t piece_id;
  double log_prob;

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

// DAG over the code-point positions of one word. Edges are kept sorted by
// (start, end, piece_id), which is a topological order for both passes.
class SegmentationLattice {
 public:
  struct Path {
    std::vector<uint32_t> edges;  // indices into edges(), left to right
    double score = 0.0;
    bool found = false;
  };

  SegmentationLattice() = default;

  // One edge per substring of `word` present in `trie`; log-probs are looked
  // up by piece id in `log_probs`.
  static SegmentationLattice Build(std::u32string_view word,
                                   const PieceTrie& trie,
                                   std::span<const double> log_probs,
                                   size_t max_piece_length = SIZE_MAX);

  // Adds a single-character edge with `log_prob` at every position that has
  // no length-one piece, guaranteeing a full path.
  void AddUnknownEdges(double log_prob);

  const std::u32string& word() const { return word_; }
  size_t length() const { return word_.size(); }
  const std::vector<LatticeEdge>& edges() const { return edges_; }
  std::u32string_view EdgeSurface(const LatticeEdge& e) const {
    return std::u32string_view(word_).substr(e.start, e.end - e.start);
  }

  bool HasPath() const;

  // log of the summed probability of all full paths (-inf when pathless).
  double LogPartition() const;

  // Forward-backward in log space. Adds weight * P(edge | word) to
  // expected[piece_id] for every piece edge and returns log Z.
  double AccumulateExpectedCounts(double weight,
                                  std::span<double> expected) const;

  // Maximum-score full path, ignoring edges of `excluded_piece`. Ties prefer
  // fewer pieces, then the lexicographically smaller piece sequence.
  Path Viterbi(int32_t excluded_piece = kNoExclusion) const;

 private:
  bool Precedes(uint32_t a, uint32_t b, std::span<const int32_t> back) const;

  std::u32string word_;
  std::vector<LatticeEdge> edges_;
};

// Builds a lattice straight from a piece table (constructs a temporary trie).
SegmentationLattice BuildLattice(std::string_view word, const PieceTable& pieces);

// log(exp(a) + exp(b)) handling -inf operands.
double LogAdd(double a, double b);

}  // namespace sublab

#endif  // SUBLAB_LATTICE_H_
