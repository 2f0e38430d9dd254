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

#include "sublab/conll.h"

#include <fstream>

#include "sublab/string_util.h"
#include "sublab/utf8.h"

namespace sublab {
namespace {

std::optional<size_t> ResolveColumn(int column, size_t num_columns) {
  const long idx = column < 0 ? static_cast<long>(num_columns) + column : column;
  if (idx < 0 || idx >= static_cast<long>(num_columns)) return std::nullopt;
  return static_cast<size_t>(idx);
}

}  // namespace

absl::StatusOr<std::vector<LabeledSentence>> ParseConll(
    std::istream& in, int token_column, int label_column,
    std::string_view source) {
  std::vector<LabeledSentence> sentences;
  LabeledSentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = LabeledSentence();
  };
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto bad = FindInvalidUtf8(line); bad.has_value()) {
      return absl::InvalidArgumentError(StrCat(
          source, ":", line_number, ": invalid UTF-8 at byte ", *bad));
    }
    const std::vector<std::string_view> cols =
        SplitAny(line, " \t\r");
    if (cols.empty()) {
      flush();
      continue;
    }
    if (cols[0].starts_with("-DOCSTART-")) continue;
    const auto tok = ResolveColumn(token_column, cols.size());
    const auto lab = ResolveColumn(label_column, cols.size());
    if (!tok.has_value() || !lab.has_value()) {
      return absl::InvalidArgumentError(StrCat(
          source, ":", line_number, ": missing column ",
          tok.has_value() ? label_column : token_column, " (line has ",
          cols.size(), " columns)"));
    }
    current.tokens.emplace_back(cols[*tok]);
    current.gold.emplace_back(cols[*lab]);
  }
  if (in.bad()) {
    return absl::DataLossError(
        StrCat(source, ": I/O error reading line ", line_number + 1));
  }
  flush();
  return sentences;
}

absl::StatusOr<std::vector<LabeledSentence>> ParseConllFile(
    const std::filesystem::path& path, int token_column, int label_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path.string()));
  return ParseConll(in, token_column, label_column, path.string());
}

absl::Status AttachPredictions(std::span<const LabeledSentence> predictions,
                               std::vector<LabeledSentence>* gold) {
  const size_t common = std::min(predictions.size(), gold->size());
  for (size_t i = 0; i < common; ++i) {
    if (predictions[i].gold.size() != (*gold)[i].tokens.size()) {
      return absl::InvalidArgumentError(StrCat(
          "prediction alignment error at sentence ", i + 1, ": gold has ",
          (*gold)[i].tokens.size(), " tokens, predictions have ",
          predictions[i].gold.size()));
    }
  }
  if (predictions.size() != gold->size()) {
    return absl::InvalidArgumentError(StrCat(
        "prediction alignment error at sentence ", common + 1, ": gold has ",
        gold->size(), " sentences, predictions have ", predictions.size()));
  }
  for (size_t i = 0; i < common; ++i) (*gold)[i].pred = predictions[i].gold;
  return absl::OkStatus();
}

}  // namespace sublab
