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

#include "sublab/segmenter.h"

#include "sublab/string_util.h"
#include "sublab/lattice.h"
#include "sublab/normalizer.h"
#include "sublab/utf8.h"

namespace sublab {

Segmentation ViterbiSegment(std::string_view word, const SubwordModel& model) {
  Segmentation seg;
  if (word.empty()) return seg;
  auto lattice = SegmentationLattice::Build(DecodeUtf8(word), model.trie(),
                                            model.log_probs(),
                                            model.max_piece_length());
  lattice.AddUnknownEdges(model.unk_log_prob());
  const auto path = lattice.Viterbi();
  seg.score = path.score;
  bool in_unknown = false;
  for (uint32_t idx : path.edges) {
    const LatticeEdge& e = lattice.edges()[idx];
    if (e.piece_id == kUnknownEdgeId) {
      if (!in_unknown) {
        seg.ids.push_back(model.unk_id());
        seg.pieces.emplace_back(kUnknownToken);
      }
      in_unknown = true;
      continue;
    }
    in_unknown = false;
    const int id = model.piece_id_offset() + e.piece_id;
    seg.ids.push_back(id);
    seg.pieces.emplace_back(model.IdToPiece(id));
  }
  return seg;
}

nlohmann::json Encoding::ToJson() const {
  nlohmann::json j;
  j["pieces"] = pieces;
  j["ids"] = ids;
  j["word_boundaries"] = nlohmann::json::array();
  for (const auto& w : word_boundaries) {
    j["word_boundaries"].push_back({w.start, w.count});
  }
  return j;
}

Encoding Encode(std::string_view text, const SubwordModel& model) {
  Encoding enc;
  const std::string normalized = NormalizeText(text, model.normalization());
  for (const auto& word : Pretokenize(normalized)) {
    Segmentation seg = ViterbiSegment(word.surface, model);
    enc.word_boundaries.push_back({enc.pieces.size(), seg.pieces.size()});
    for (size_t i = 0; i < seg.pieces.size(); ++i) {
      enc.pieces.push_back(std::move(seg.pieces[i]));
      enc.ids.push_back(seg.ids[i]);
    }
  }
  return enc;
}

absl::StatusOr<std::string> Decode(std::span<const int> ids,
                                   const SubwordModel& model) {
  std::vector<std::string> surfaces;
  surfaces.reserve(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    const int id = ids[i];
    if (id < 0 || id >= model.vocab_size()) {
      return absl::OutOfRangeError(StrCat(
          "id ", id, " at index ", i, " is outside [0, ", model.vocab_size(),
          ")"));
    }
    if (id == model.unk_id()) {
      surfaces.emplace_back(kReplacementUtf8);
    } else if (!model.IsSpecial(id)) {
      surfaces.emplace_back(model.IdToPiece(id));
    }
  }
  return Detokenize(surfaces);
}

int Fragmentation(std::string_view word, const SubwordModel& model) {
  return static_cast<int>(ViterbiSegment(word, model).ids.size());
}

int TokenFragmentation(std::string_view token, const SubwordModel& model) {
  const std::string normalized = NormalizeText(token, model.normalization());
  int pieces = 0;
  for (const auto& word : Pretokenize(normalized)) {
    pieces += Fragmentation(word.surface, model);
  }
  return std::max(pieces, 1);
}

}  // namespace sublab
