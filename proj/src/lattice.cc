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

#include "sublab/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sublab/utf8.h"

namespace sublab {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool EdgeOrder(const LatticeEdge& a, const LatticeEdge& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.end != b.end) return a.end < b.end;
  return a.piece_id < b.piece_id;
}

}  // namespace

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

SegmentationLattice SegmentationLattice::Build(std::u32string_view word,
                                               const PieceTrie& trie,
                                               std::span<const double> log_probs,
                                               size_t max_piece_length) {
  SegmentationLattice lattice;
  lattice.word_.assign(word);
  const auto n = static_cast<uint32_t>(word.size());
  for (uint32_t i = 0; i < n; ++i) {
    const size_t span = std::min<size_t>(max_piece_length, n - i);
    trie.ForEachPrefix(word.substr(i, span), [&](size_t len, int32_t id) {
      lattice.edges_.push_back(
          {i, i + static_cast<uint32_t>(len), id, log_probs[id]});
    });
  }
  return lattice;
}

void SegmentationLattice::AddUnknownEdges(double log_prob) {
  std::vector<bool> has_single(word_.size(), false);
  for (const auto& e : edges_) {
    if (e.end == e.start + 1) has_single[e.start] = true;
  }
  bool added = false;
  for (uint32_t i = 0; i < word_.size(); ++i) {
    if (!has_single[i]) {
      edges_.push_back({i, i + 1, kUnknownEdgeId, log_prob});
      added = true;
    }
  }
  if (added) std::sort(edges_.begin(), edges_.end(), EdgeOrder);
}

bool SegmentationLattice::HasPath() const {
  std::vector<bool> reached(word_.size() + 1, false);
  reached[0] = true;
  for (const auto& e : edges_) {
    if (reached[e.start]) reached[e.end] = true;
  }
  return reached[word_.size()];
}

double SegmentationLattice::LogPartition() const {
  std::vector<double> alpha(word_.size() + 1, kNegInf);
  alpha[0] = 0.0;
  for (const auto& e : edges_) {
    if (alpha[e.start] != kNegInf) {
      alpha[e.end] = LogAdd(alpha[e.end], alpha[e.start] + e.log_prob);
    }
  }
  return alpha[word_.size()];
}

double SegmentationLattice::AccumulateExpectedCounts(
    double weight, std::span<double> expected) const {
  const size_t n = word_.size();
  std::vector<double> alpha(n + 1, kNegInf);
  std::vector<double> beta(n + 1, kNegInf);
  alpha[0] = 0.0;
  beta[n] = 0.0;
  for (const auto& e : edges_) {
    if (alpha[e.start] != kNegInf) {
      alpha[e.end] = LogAdd(alpha[e.end], alpha[e.start] + e.log_prob);
    }
  }
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
    if (beta[it->end] != kNegInf) {
      beta[it->start] = LogAdd(beta[it->start], it->log_prob + beta[it->end]);
    }
  }
  const double log_z = alpha[n];
  if (log_z == kNegInf) return log_z;
  for (const auto& e : edges_) {
    if (e.piece_id < 0) continue;
    const double lp = alpha[e.start] + e.log_prob + beta[e.end] - log_z;
    if (lp == kNegInf) continue;
    expected[e.piece_id] += weight * std::exp(lp);
  }
  return log_z;
}

// True if the path ending with edge `a` is lexicographically smaller than the
// one ending with edge `b`. Both paths cover the same prefix, so at the first
// differing piece both pieces start at the same offset and the shorter one
// (a proper prefix of the other) is smaller.
bool SegmentationLattice::Precedes(uint32_t a, uint32_t b,
                                   std::span<const int32_t> back) const {
  auto chain = [&](uint32_t last) {
    std::vector<uint32_t> ends;
    for (int32_t e = static_cast<int32_t>(last); e >= 0;
         e = back[edges_[e].start]) {
      ends.push_back(edges_[e].end);
    }
    std::reverse(ends.begin(), ends.end());
    return ends;
  };
  const auto ea = chain(a);
  const auto eb = chain(b);
  for (size_t i = 0; i < std::min(ea.size(), eb.size()); ++i) {
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  }
  return edges_[a].piece_id < edges_[b].piece_id;
}

SegmentationLattice::Path SegmentationLattice::Viterbi(
    int32_t excluded_piece) const {
  const size_t n = word_.size();
  std::vector<double> score(n + 1, kNegInf);
  std::vector<uint32_t> count(n + 1, 0);
  std::vector<int32_t> back(n + 1, -1);
  std::vector<bool> reached(n + 1, false);
  reached[0] = true;
  score[0] = 0.0;
  for (uint32_t idx = 0; idx < edges_.size(); ++idx) {
    const LatticeEdge& e = edges_[idx];
    if (e.piece_id == excluded_piece || !reached[e.start]) continue;
    const double s = score[e.start] + e.log_prob;
    const uint32_t c = count[e.start] + 1;
    bool take = !reached[e.end];
    if (!take) {
      if (s != score[e.end]) {
        take = s > score[e.end];
      } else if (c != count[e.end]) {
        take = c < count[e.end];
      } else {
        take = Precedes(idx, static_cast<uint32_t>(back[e.end]), back);
      }
    }
    if (take) {
      reached[e.end] = true;
      score[e.end] = s;
      count[e.end] = c;
      back[e.end] = static_cast<int32_t>(idx);
    }
  }
  Path path;
  if (!reached[n] || n == 0) {
    path.found = n == 0;
    return path;
  }
  path.found = true;
  path.score = score[n];
  for (int32_t e = back[n]; e >= 0; e = back[edges_[e].start]) {
    path.edges.push_back(static_cast<uint32_t>(e));
  }
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

SegmentationLattice BuildLattice(std::string_view word, const PieceTable& pieces) {
  const auto surfaces = pieces.DecodedSurfaces();
  const PieceTrie trie(surfaces);
  const auto log_probs = pieces.LogProbs();
  return SegmentationLattice::Build(DecodeUtf8(word), trie, log_probs);
}

}  // namespace sublab
