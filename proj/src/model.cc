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

#include "sublab/model.h"

#include <zlib.h>

#include <charconv>
#include <cmath>
#include <cstdio>

#include "sublab/string_util.h"
#include "json.hpp"
#include "sublab/file_util.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

constexpr double kUnkPenalty = 10.0;
constexpr double kMassTolerance = 1e-6;

std::string Checksum(std::string_view body) {
  const uLong crc =
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()),
            static_cast<uInt>(body.size()));
  return fmt::format("crc32:{:08x}", static_cast<uint32_t>(crc));
}

std::string FormatLogProb(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool ContainsWhitespace(std::string_view s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> DefaultSpecials() {
  return {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
}

absl::StatusOr<SubwordModel> SubwordModel::Create(
    std::vector<std::string> specials, PieceTable pieces,
    NormalizationConfig normalization) {
  SubwordModel m;
  for (size_t i = 0; i < specials.size(); ++i) {
    if (specials[i].empty()) {
      return absl::InvalidArgumentError("empty special token");
    }
    if (!m.id_of_.emplace(specials[i], static_cast<int>(i)).second) {
      return absl::InvalidArgumentError(StrCat(
          "non-bijective ids: special token \"", specials[i], "\" repeated"));
    }
  }
  auto unk = m.id_of_.find(std::string(kUnknownToken));
  if (unk == m.id_of_.end()) {
    return absl::InvalidArgumentError("specials must include [UNK]");
  }
  m.unk_id_ = unk->second;

  const int offset = static_cast<int>(specials.size());
  double min_lp = 0.0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces.pieces[i];
    if (p.surface.empty() || ContainsWhitespace(p.surface)) {
      return absl::InvalidArgumentError(
          StrCat("invalid piece surface \"", p.surface, "\""));
    }
    if (!std::isfinite(p.log_prob) || p.log_prob > 0.0) {
      return absl::InvalidArgumentError(StrCat(
          "piece \"", p.surface, "\" has invalid log_prob ", p.log_prob));
    }
    if (auto [it, inserted] =
            m.id_of_.emplace(p.surface, offset + static_cast<int>(i));
        !inserted) {
      if (it->second < offset) {
        return absl::InvalidArgumentError(StrCat(
            "non-bijective ids: piece \"", p.surface,
            "\" collides with a special token"));
      }
      return absl::InvalidArgumentError(
          StrCat("duplicate piece \"", p.surface, "\""));
    }
    min_lp = std::min(min_lp, p.log_prob);
  }
  if (!pieces.pieces.empty()) {
    const double mass = pieces.ProbabilityMass();
    if (std::abs(mass - 1.0) > kMassTolerance) {
      return absl::InvalidArgumentError(StrCat(
          "piece probabilities sum to ", mass, ", expected 1"));
    }
  }

  const auto surfaces = pieces.DecodedSurfaces();
  for (const auto& s : surfaces) {
    m.max_piece_length_ = std::max(m.max_piece_length_, s.size());
  }
  m.trie_ = PieceTrie(surfaces);
  m.log_probs_ = pieces.LogProbs();
  m.unk_log_prob_ = min_lp - kUnkPenalty;
  m.specials_ = std::move(specials);
  m.table_ = std::move(pieces);
  m.normalization_ = normalization;
  return m;
}

std::string_view SubwordModel::marker() const { return kMarkerUtf8; }

std::optional<int> SubwordModel::PieceToId(std::string_view surface) const {
  auto it = id_of_.find(std::string(surface));
  if (it == id_of_.end()) return std::nullopt;
  return it->second;
}

std::string_view SubwordModel::IdToPiece(int id) const {
  if (IsSpecial(id)) return specials_[id];
  return table_.pieces[id - piece_id_offset()].surface;
}

std::string SubwordModel::Serialize() const {
  std::string body;
  for (const auto& p : table_.pieces) {
    StrAppend(&body, p.surface, "\t", FormatLogProb(p.log_prob), "\n");
  }
  nlohmann::json header;
  header["vocab_size"] = vocab_size();
  header["specials"] = specials_;
  header["normalization"] = {
      {"form", std::string(NormalizationFormName(normalization_.form))},
      {"lowercase", normalization_.lowercase},
      {"collapse_whitespace", normalization_.collapse_whitespace}};
  header["marker"] = std::string(kMarkerUtf8);
  header["vocab_size_includes_specials"] = true;
  header["checksum"] = Checksum(body);
  return StrCat(kModelMagic, " ", kModelFormatVersion, "\n",
                      header.dump(), "\n", body);
}

absl::StatusOr<SubwordModel> SubwordModel::Parse(std::string_view contents) {
  if (auto bad = FindInvalidUtf8(contents); bad.has_value()) {
    return absl::InvalidArgumentError(
        StrCat("model file is not UTF-8 (byte offset ", *bad, ")"));
  }
  auto next_line = [&contents](std::string_view* line) {
    if (contents.empty()) return false;
    const size_t nl = contents.find('\n');
    *line = contents.substr(0, nl);
    contents.remove_prefix(nl == std::string_view::npos ? contents.size()
                                                        : nl + 1);
    if (!line->empty() && line->back() == '\r') line->remove_suffix(1);
    return true;
  };

  std::string_view line;
  if (!next_line(&line) || !line.starts_with(kModelMagic)) {
    return absl::InvalidArgumentError("not a subword model file");
  }
  const std::string expected_magic =
      StrCat(kModelMagic, " ", kModelFormatVersion);
  if (line != expected_magic) {
    return absl::FailedPreconditionError(StrCat(
        "version mismatch: file says \"", line, "\", expected \"",
        expected_magic, "\""));
  }
  if (!next_line(&line)) {
    return absl::InvalidArgumentError("missing model header");
  }
  const std::string_view body = contents;

  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) {
    return absl::InvalidArgumentError("line 2: malformed JSON header");
  }
  int vocab_size = 0;
  std::vector<std::string> specials;
  NormalizationConfig norm;
  try {
    vocab_size = header.at("vocab_size").get<int>();
    specials = header.at("specials").get<std::vector<std::string>>();
    const auto& n = header.at("normalization");
    auto form = ParseNormalizationForm(n.at("form").get<std::string>());
    if (!form.ok()) return form.status();
    norm.form = *form;
    norm.lowercase = n.at("lowercase").get<bool>();
    norm.collapse_whitespace = n.at("collapse_whitespace").get<bool>();
    if (header.at("marker").get<std::string>() != kMarkerUtf8) {
      return absl::InvalidArgumentError("unsupported boundary marker");
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        StrCat("line 2: invalid header: ", e.what()));
  }
  if (header.contains("checksum")) {
    const std::string actual = Checksum(body);
    if (!header["checksum"].is_string() ||
        header["checksum"].get<std::string>() != actual) {
      return absl::DataLossError(StrCat(
          "checksum failure: header says ", header["checksum"].dump(),
          ", piece lines hash to \"", actual, "\""));
    }
  }

  PieceTable table;
  std::unordered_map<std::string, size_t> seen;
  size_t line_number = 2;
  while (next_line(&line)) {
    ++line_number;
    if (line.empty()) continue;
    const size_t tab = line.rfind('\t');
    if (tab == std::string_view::npos || tab == 0) {
      return absl::InvalidArgumentError(StrCat(
          "line ", line_number, ": expected `surface<TAB>log_prob`"));
    }
    Piece p;
    p.surface.assign(line.substr(0, tab));
    const std::string_view num = line.substr(tab + 1);
    const auto res = std::from_chars(num.data(), num.data() + num.size(),
                                     p.log_prob);
    if (res.ec != std::errc() || res.ptr != num.data() + num.size()) {
      return absl::InvalidArgumentError(StrCat(
          "line ", line_number, ": bad log_prob \"", num, "\""));
    }
    if (auto [it, inserted] = seen.emplace(p.surface, line_number); !inserted) {
      return absl::InvalidArgumentError(
          StrCat("duplicate piece \"", p.surface, "\" at line ",
                       line_number, " (first at line ", it->second, ")"));
    }
    p.required = CharLength(p.surface) == 1;
    table.pieces.push_back(std::move(p));
  }
  if (static_cast<size_t>(vocab_size) != specials.size() + table.size()) {
    return absl::InvalidArgumentError(StrCat(
        "non-bijective ids: header declares vocab_size ", vocab_size,
        " but the file defines ", specials.size() + table.size(), " entries"));
  }
  return Create(std::move(specials), std::move(table), norm);
}

absl::Status SubwordModel::Save(const std::filesystem::path& path) const {
  return WriteFileAtomically(path, Serialize());
}

absl::StatusOr<SubwordModel> SubwordModel::Load(const std::filesystem::path& path) {
  auto contents = ReadFile(path);
  if (!contents.ok()) return contents.status();
  auto model = Parse(*contents);
  if (!model.ok()) {
    return absl::Status(model.status().code(),
                        StrCat(path.string(), ": ", model.status().message()));
  }
  return model;
}

bool operator==(const SubwordModel& a, const SubwordModel& b) {
  if (a.specials_ != b.specials_ || !(a.normalization_ == b.normalization_) ||
      a.table_.size() != b.table_.size()) {
    return false;
  }
  for (size_t i = 0; i < a.table_.size(); ++i) {
    const Piece& x = a.table_.pieces[i];
    const Piece& y = b.table_.pieces[i];
    if (x.surface != y.surface || x.log_prob != y.log_prob) return false;
  }
  return true;
}

}  // namespace sublab
