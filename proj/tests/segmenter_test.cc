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

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sublab/lattice.h"
#include "sublab/normalizer.h"
#include "sublab/piece_trie.h"
#include "sublab/pretokenizer.h"
#include "sublab/segmenter.h"
#include "sublab/utf8.h"
#include "test_util.h"

namespace sublab {
namespace {

using testing::MakeModel;
using testing::MakeTable;

const std::string M(kMarkerUtf8);

TEST(Lattice, TwoCharacterWord) {
  const auto lattice = BuildLattice("ab", MakeTable({{"a", 1}, {"b", 1}, {"ab", 1}}));
  ASSERT_EQ(lattice.edges().size(), 3u);
  std::set<std::tuple<uint32_t, uint32_t, std::string>> got;
  for (const auto& e : lattice.edges()) {
    got.insert({e.start, e.end, EncodeUtf8(lattice.EdgeSurface(e))});
  }
  EXPECT_EQ(got, (std::set<std::tuple<uint32_t, uint32_t, std::string>>{
                     {0, 1, "a"}, {1, 2, "b"}, {0, 2, "ab"}}));
}

TEST(Lattice, NoMatches) {
  const auto lattice = BuildLattice("a", MakeTable({{"b", 1}}));
  EXPECT_TRUE(lattice.edges().empty());
  EXPECT_FALSE(lattice.HasPath());
  EXPECT_EQ(lattice.LogPartition(), -std::numeric_limits<double>::infinity());
}

TEST(Lattice, ThreeCharacterWordHasFourPaths) {
  // Uniform log_probs of 0 make the partition function count paths.
  PieceTable t;
  for (const char* s : {"a", "b", "c", "ab", "bc", "abc"}) t.pieces.push_back({s, 0.0});
  const auto lattice = BuildLattice("abc", t);
  EXPECT_EQ(lattice.edges().size(), 6u);
  EXPECT_NEAR(std::exp(lattice.LogPartition()), 4.0, 1e-12);
}

TEST(Lattice, EdgesMatchSurfacesOnFuzzedWords) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    std::set<std::u32string> vocab;
    for (int i = 0; i < 15; ++i) vocab.insert(testing::RandomWord(rng, U"abcé", 1, 4));
    PieceTable t;
    for (const auto& v : vocab) t.pieces.push_back({EncodeUtf8(v), -1.0});
    const std::u32string word = testing::RandomWord(rng, U"abcé", 1, 10);
    const auto lattice = BuildLattice(EncodeUtf8(word), t);
    size_t expected = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      for (size_t j = i + 1; j <= word.size(); ++j) {
        expected += vocab.count(word.substr(i, j - i));
      }
    }
    ASSERT_EQ(lattice.edges().size(), expected);
    for (const auto& e : lattice.edges()) {
      ASSERT_EQ(std::u32string(lattice.EdgeSurface(e)),
                t.DecodedSurfaces()[e.piece_id]);
    }
  }
}

TEST(Viterbi, WholeWordBeatsSplit) {
  const auto model = MakeModel({{M + "a", 0.4}, {"b", 0.3}, {M + "ab", 0.3}});
  const auto seg = ViterbiSegment(M + "ab", model);
  EXPECT_EQ(seg.pieces, std::vector<std::string>{M + "ab"});
  EXPECT_NEAR(seg.score, std::log(0.3), 1e-12);
}

TEST(Viterbi, SinglePieceWord) {
  const auto model = MakeModel({{M + "x", 0.5}, {M, 0.25}, {"x", 0.25}});
  EXPECT_EQ(ViterbiSegment(M + "x", model).pieces, std::vector<std::string>{M + "x"});
  EXPECT_EQ(Fragmentation(M + "x", model), 1);
}

TEST(Viterbi, TiesPreferFewerPieces) {
  // P(ab) = P(a) * P(b): equal scores, one piece wins.
  const auto model = MakeModel({{"a", 0.5}, {"b", 0.25}, {"ab", 0.125}, {"c", 0.125}});
  EXPECT_EQ(ViterbiSegment("ab", model).pieces, std::vector<std::string>{"ab"});
}

TEST(Viterbi, TiesThenPreferLexicographicallySmaller) {
  // a|bc and ab|c score the same with the same piece count; "a" < "ab".
  const auto model = MakeModel({{"a", 0.25}, {"bc", 0.25}, {"ab", 0.25}, {"c", 0.25}});
  EXPECT_EQ(ViterbiSegment("abc", model).pieces, (std::vector<std::string>{"a", "bc"}));
}

TEST(Viterbi, UncoveredRunsBecomeOneUnknown) {
  const auto model = MakeModel({{M, 0.3}, {"a", 0.4}, {"b", 0.3}});
  const auto seg = ViterbiSegment(M + "axyzb", model);
  EXPECT_EQ(seg.pieces, (std::vector<std::string>{M, "a", "[UNK]", "b"}));
  EXPECT_EQ(seg.ids[2], model.unk_id());
  EXPECT_EQ(Fragmentation(M + "xy", model), 2);
}

TEST(Viterbi, OptimalOnFuzzedVocabularies) {
  std::mt19937_64 rng(2024);
  const std::u32string alphabet = U"abcd";
  for (int iter = 0; iter < 1000; ++iter) {
    oracle::Vocab vocab;
    std::vector<std::pair<std::string, double>> weights;
    // Single characters keep every word segmentable.
    for (char32_t c : alphabet) vocab[std::u32string(1, c)] = 0;
    while (vocab.size() < 5 + rng() % 26) {
      vocab[testing::RandomWord(rng, alphabet, 2, 5)] = 0;
    }
    for (auto& [s, lp] : vocab) {
      weights.push_back({EncodeUtf8(s), 1.0 + static_cast<double>(rng() % 1000)});
    }
    const auto model = MakeModel(weights);
    for (auto& [s, lp] : vocab) {
      lp = model.log_probs()[*model.PieceToId(EncodeUtf8(s)) - model.piece_id_offset()];
    }
    const std::u32string word = testing::RandomWord(rng, alphabet, 1, 10);
    const auto seg = ViterbiSegment(EncodeUtf8(word), model);
    const auto best = oracle::BestScore(word, vocab);
    ASSERT_TRUE(best.has_value());
    double score = 0.0;
    for (const auto& p : seg.pieces) score += vocab.at(DecodeUtf8(p));
    ASSERT_EQ(score, *best) << EncodeUtf8(word);
    ASSERT_EQ(seg.score, score);
  }
}

TEST(Viterbi, AddingAPieceLowersScore) {
  const auto model = MakeModel({{"a", 0.5}, {"b", 0.3}, {"c", 0.2}});
  double prev = 0.0;
  std::string word;
  for (int i = 0; i < 8; ++i) {
    word += "abc"[i % 3];
    const double s = ViterbiSegment(word, model).score;
    EXPECT_LT(s, prev);
    prev = s;
  }
}

TEST(Encode, Empty) {
  const auto model = MakeModel({{M, 0.5}, {"a", 0.5}});
  const auto enc = Encode("", model);
  EXPECT_TRUE(enc.pieces.empty());
  EXPECT_TRUE(enc.ids.empty());
  EXPECT_TRUE(enc.word_boundaries.empty());
  EXPECT_EQ(*Decode(std::vector<int>{}, model), "");
}

TEST(Encode, TwoWords) {
  std::vector<std::pair<std::string, double>> w = {{M + "acquisition", 3}, {M + "of", 3}, {M, 1}};
  for (char c : std::string("acqustonf")) w.push_back({std::string(1, c), 1});
  const auto model = MakeModel(w);
  const auto enc = Encode("acquisition of", model);
  EXPECT_EQ(enc.pieces, (std::vector<std::string>{M + "acquisition", M + "of"}));
  EXPECT_EQ(enc.word_boundaries, (std::vector<WordSpan>{{0, 1}, {1, 1}}));
  for (size_t i = 0; i < enc.pieces.size(); ++i) {
    EXPECT_EQ(*model.PieceToId(enc.pieces[i]), enc.ids[i]);
  }
}

TEST(Encode, SingleCharacterVocabulary) {
  std::mt19937_64 rng(8);
  const std::u32string alphabet = U"abcé ";
  std::vector<std::pair<std::string, double>> w = {{M, 1}};
  for (char32_t c : U"abcé") {
    if (c) w.push_back({EncodeUtf8(std::u32string(1, c)), 1});
  }
  const auto model = MakeModel(w);
  for (int i = 0; i < 200; ++i) {
    const std::string text = EncodeUtf8(testing::RandomWord(rng, alphabet, 0, 25));
    const std::string norm = NormalizeText(text, model.normalization());
    const auto words = Pretokenize(norm);
    size_t non_space = 0;
    for (char32_t c : DecodeUtf8(norm)) non_space += c != U' ';
    const auto enc = Encode(text, model);
    ASSERT_EQ(enc.pieces.size(), non_space + words.size());
    ASSERT_EQ(enc.word_boundaries.size(), words.size());
    ASSERT_EQ(*Decode(enc.ids, model), norm);
  }
}

TEST(Encode, FragmentationSumsToPieceCount) {
  const auto model = MakeModel({{M, 2}, {"a", 3}, {"b", 2}, {"ab", 2}, {M + "a", 1}, {"ba", 1}});
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::string text = EncodeUtf8(testing::RandomWord(rng, U"ab  ", 0, 20));
    int total = 0;
    for (const auto& w : Pretokenize(NormalizeText(text, model.normalization()))) {
      total += Fragmentation(w.surface, model);
    }
    const auto enc = Encode(text, model);
    ASSERT_EQ(static_cast<size_t>(total), enc.pieces.size());
    size_t sum = 0;
    for (const auto& b : enc.word_boundaries) {
      ASSERT_GE(b.count, 1u);
      ASSERT_EQ(b.start, sum);
      sum += b.count;
    }
    ASSERT_EQ(sum, enc.pieces.size());
  }
}

TEST(Decode, ConcatenatesSurfaces) {
  const auto model = MakeModel({{M + "a", 0.5}, {"b", 0.5}});
  const std::vector<int> ids = {*model.PieceToId(M + "a"), *model.PieceToId("b")};
  EXPECT_EQ(*Decode(ids, model), "ab");
}

TEST(Decode, UnknownBecomesReplacementCharacter) {
  const auto model = MakeModel({{M, 0.5}, {"a", 0.5}});
  const auto enc = Encode("a\xE2\x82\xAC" "a", model);  // euro sign is uncovered
  EXPECT_EQ(*Decode(enc.ids, model), "a\xEF\xBF\xBD" "a");
}

TEST(Decode, RejectsOutOfRangeIdWithIndex) {
  const auto model = MakeModel({{M, 0.5}, {"a", 0.5}});
  const std::vector<int> ids = {5, 6, 99};
  auto text = Decode(ids, model);
  ASSERT_FALSE(text.ok());
  EXPECT_EQ(text.status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_NE(text.status().message().find("index 2"), std::string::npos) << text.status();
  EXPECT_FALSE(Decode(std::vector<int>{-1}, model).ok());
}

TEST(Encode, JsonShape) {
  const auto model = MakeModel({{M, 0.5}, {"a", 0.5}});
  const auto j = Encode("a aa", model).ToJson();
  EXPECT_EQ(j["pieces"].size(), 5u);
  EXPECT_EQ(j["ids"].size(), 5u);
  EXPECT_EQ(j["word_boundaries"], nlohmann::json::parse("[[0,2],[2,3]]"));
}

}  // namespace
}  // namespace sublab
