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

#ifndef SUBLAB_MODEL_H_
#define SUBLAB_MODEL_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "sublab/normalizer.h"
#include "sublab/piece_table.h"
#include "sublab/piece_trie.h"

namespace sublab {

inline constexpr std::string_view kModelMagic = "#subword-model";
inline constexpr std::string_view kModelFormatVersion = "v1";
inline constexpr std::string_view kUnknownToken = "[UNK]";

// [PAD] [UNK] [CLS] [SEP] [MASK]
std::vector<std::string> DefaultSpecials();

// A trained unigram vocabulary. Specials take ids 0..|specials|-1 in order;
// piece i of the table takes id |specials| + i. Immutable once built.
//
// File format (UTF-8):
//   #subword-model v1
//   {"checksum":"crc32:...","marker":"▁","normalization":{...},
//    "specials":[...],"vocab_size":N,"vocab_size_includes_specials":true}
//   <surface>\t<log_prob>      one line per piece, in id order
// log_probs are written as shortest round-trip decimals. The checksum covers
// the piece lines and is optional on input.
class SubwordModel {
 public:
  static absl::StatusOr<SubwordModel> Create(std::vector<std::string> specials,
                                             PieceTable pieces,
                                             NormalizationConfig normalization);

  int vocab_size() const {
    return static_cast<int>(specials_.size() + table_.size());
  }
  const std::vector<std::string>& specials() const { return specials_; }
  const PieceTable& piece_table() const { return table_; }
  const NormalizationConfig& normalization() const { return normalization_; }
  std::string_view marker() const;
  std::string_view version() const { return kModelFormatVersion; }

  std::optional<int> PieceToId(std::string_view surface) const;
  // Precondition: 0 <= id < vocab_size().
  std::string_view IdToPiece(int id) const;
  bool IsSpecial(int id) const {
    return id >= 0 && id < static_cast<int>(specials_.size());
  }
  int unk_id() const { return unk_id_; }
  int piece_id_offset() const { return static_cast<int>(specials_.size()); }

  // Lookup structures over the piece table (local ids 0..|pieces|-1).
  const PieceTrie& trie() const { return trie_; }
  std::span<const double> log_probs() const { return log_probs_; }
  size_t max_piece_length() const { return max_piece_length_; }
  // Score of one unknown character: min piece log_prob minus a fixed penalty.
  double unk_log_prob() const { return unk_log_prob_; }

  std::string Serialize() const;
  static absl::StatusOr<SubwordModel> Parse(std::string_view contents);

  absl::Status Save(const std::filesystem::path& path) const;
  static absl::StatusOr<SubwordModel> Load(const std::filesystem::path& path);

  friend bool operator==(const SubwordModel& a, const SubwordModel& b);

 private:
  SubwordModel() = default;

  std::vector<std::string> specials_;
  PieceTable table_;
  NormalizationConfig normalization_;
  std::unordered_map<std::string, int> id_of_;
  PieceTrie trie_;
  std::vector<double> log_probs_;
  size_t max_piece_length_ = 0;
  double unk_log_prob_ = 0.0;
  int unk_id_ = -1;
};

}  // namespace sublab

#endif  // SUBLAB_MODEL_H_
