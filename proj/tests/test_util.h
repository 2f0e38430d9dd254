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

#ifndef SUBLAB_TESTS_TEST_UTIL_H_
#define SUBLAB_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "sublab/frequency_table.h"
#include "sublab/model.h"
#include "sublab/piece_table.h"

namespace sublab::testing {

// Piece table from (surface, weight) pairs; weights are normalized.
inline PieceTable MakeTable(
    const std::vector<std::pair<std::string, double>>& weights) {
  double total = 0.0;
  for (const auto& [s, w] : weights) total += w;
  PieceTable table;
  for (const auto& [s, w] : weights) {
    table.pieces.push_back({s, std::log(w / total), false});
  }
  return table;
}

inline SubwordModel MakeModel(
    const std::vector<std::pair<std::string, double>>& weights) {
  auto model = SubwordModel::Create(DefaultSpecials(), MakeTable(weights),
                                    NormalizationConfig{});
  EXPECT_TRUE(model.ok()) << model.status();
  return *std::move(model);
}

inline WordFrequencyTable MakeFrequencies(
    const std::vector<std::pair<std::string, int64_t>>& counts) {
  WordFrequencyTable t;
  for (const auto& [s, c] : counts) t.Add(s, c);
  return t;
}

// Fresh empty directory under the test temp dir.
inline std::filesystem::path ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("sublab_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::u32string RandomWord(std::mt19937_64& rng,
                                 std::u32string_view alphabet, size_t min_len,
                                 size_t max_len) {
  const size_t len = min_len + rng() % (max_len - min_len + 1);
  std::u32string w;
  for (size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
  return w;
}

}  // namespace sublab::testing

#endif  // SUBLAB_TESTS_TEST_UTIL_H_
