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

#include "sublab/synthetic.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace sublab {
namespace {

constexpr const char* kOnsets[] = {"b", "d", "f", "g", "h", "k", "l", "m",
                                   "n", "p", "r", "s", "t", "v", "w", "st",
                                   "tr", "pl", "gr", "ch", "sh", "br", ""};
constexpr const char* kNuclei[] = {"a", "e", "i", "o", "u", "ea", "ou", "ai"};
constexpr const char* kCodas[] = {"", "", "", "n", "r", "s", "t", "l", "nd",
                                  "ck", "m"};
// Entity names use a wider, rarer inventory.
constexpr const char* kRareOnsets[] = {"z", "x", "q", "kv", "zh", "dj", "y",
                                       "vr", "sz", "kh", "ts", "j", "b", "k",
                                       "m", "t"};
constexpr const char* kRareNuclei[] = {"a", "e", "i", "o", "u", "y", "ae",
                                       "oe", "ui", "aa"};
constexpr const char* kRareCodas[] = {"", "x", "z", "k", "sk", "v", "rn",
                                      "q", "tz", ""};
constexpr const char* kSuffixes[] = {"s", "ed", "ing", "er", "ly", "tion",
                                     "ness", "able", "es"};
constexpr const char* kFunctionWords[] = {
    "the", "of", "and", "to", "in", "a", "is", "that", "for", "on", "was",
    "with", "as", "by", "at", "from", "it", "an", "be", "this", "or", "which"};
constexpr const char* kOrgSuffixes[] = {"Inc", "Group", "Corp", "Ltd",
                                        "Foundation", "Bank"};
constexpr const char* kLocSuffixes[] = {"City", "River", "Valley", "Bay"};
constexpr const char* kPunctuation[] = {".", ",", "!", "?", ";"};

template <typename T, size_t N>
constexpr size_t Count(const T (&)[N]) {
  return N;
}

std::string Capitalize(std::string word) {
  if (!word.empty()) {
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  }
  return word;
}

}  // namespace

double SyntheticCorpus::Uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

size_t SyntheticCorpus::Below(size_t n) { return rng_() % n; }

std::string SyntheticCorpus::MakeWord(int min_syllables, int max_syllables,
                                      bool rare) {
  const int syllables =
      min_syllables + static_cast<int>(Below(max_syllables - min_syllables + 1));
  std::string word;
  for (int i = 0; i < syllables; ++i) {
    if (rare) {
      word += kRareOnsets[Below(Count(kRareOnsets))];
      word += kRareNuclei[Below(Count(kRareNuclei))];
      word += kRareCodas[Below(Count(kRareCodas))];
    } else {
      word += kOnsets[Below(Count(kOnsets))];
      word += kNuclei[Below(Count(kNuclei))];
      word += kCodas[Below(Count(kCodas))];
    }
  }
  return word;
}

SyntheticCorpus::SyntheticCorpus(const SyntheticConfig& config)
    : config_(config), rng_(config.seed), tagger_rng_(config.seed ^ 0x9e3779b97f4a7c15ULL) {
  std::set<std::string> seen(std::begin(kFunctionWords), std::end(kFunctionWords));
  while (static_cast<int>(stems_.size()) < config_.num_stems) {
    // Frequent stems come out first and are kept short.
    const int max_syl = stems_.size() < 200 ? 2 : 3;
    std::string stem = MakeWord(1, max_syl, false);
    if (stem.size() < 2 || !seen.insert(stem).second) continue;
    stems_.push_back(std::move(stem));
  }
  double total = 0.0;
  stem_cdf_.reserve(stems_.size());
  for (size_t r = 0; r < stems_.size(); ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), config_.zipf_exponent);
    stem_cdf_.push_back(total);
  }
  for (double& c : stem_cdf_) c /= total;

  for (int i = 0; i < config_.num_entities; ++i) {
    Entity e;
    switch (Below(3)) {
      case 0:
        e.type = "PER";
        e.words = {Capitalize(MakeWord(2, 3, true)), Capitalize(MakeWord(2, 4, true))};
        break;
      case 1:
        e.type = "ORG";
        e.words = {Capitalize(MakeWord(2, 4, true))};
        if (Uniform() < 0.6) e.words.push_back(kOrgSuffixes[Below(Count(kOrgSuffixes))]);
        break;
      default:
        e.type = "LOC";
        e.words = {Capitalize(MakeWord(2, 4, true))};
        if (Uniform() < 0.3) e.words.push_back(kLocSuffixes[Below(Count(kLocSuffixes))]);
        break;
    }
    entities_.push_back(std::move(e));
  }
}

SyntheticSentence SyntheticCorpus::Next() {
  SyntheticSentence out;
  auto& tokens = out.labeled.tokens;
  auto& gold = out.labeled.gold;
  std::vector<bool> rare;
  const int length = config_.min_sentence_length +
                     static_cast<int>(Below(config_.max_sentence_length -
                                            config_.min_sentence_length + 1));
  while (static_cast<int>(tokens.size()) < length) {
    const double u = Uniform();
    if (u < config_.entity_rate) {
      const Entity& e = entities_[Below(entities_.size())];
      for (size_t i = 0; i < e.words.size(); ++i) {
        tokens.push_back(e.words[i]);
        gold.push_back((i == 0 ? "B-" : "I-") + e.type);
        rare.push_back(true);
      }
    } else if (u < config_.entity_rate + config_.function_word_rate) {
      tokens.push_back(kFunctionWords[Below(Count(kFunctionWords))]);
      gold.push_back("O");
      rare.push_back(false);
    } else {
      const double v = Uniform();
      const size_t rank = static_cast<size_t>(
          std::lower_bound(stem_cdf_.begin(), stem_cdf_.end(), v) - stem_cdf_.begin());
      std::string word = stems_[std::min(rank, stems_.size() - 1)];
      if (Uniform() < config_.suffix_rate) word += kSuffixes[Below(Count(kSuffixes))];
      tokens.push_back(std::move(word));
      gold.push_back("O");
      rare.push_back(static_cast<int>(rank) >= config_.common_stems);
    }
    if (tokens.size() > 1 && Uniform() < 0.08) {
      tokens.push_back(",");
      gold.push_back("O");
      rare.push_back(false);
    }
  }
  if (!tokens.empty() && tokens[0][0] >= 'a' && tokens[0][0] <= 'z' && Uniform() < 0.7) {
    tokens[0] = Capitalize(tokens[0]);
  }
  tokens.push_back(kPunctuation[Uniform() < 0.8 ? 0 : Below(Count(kPunctuation))]);
  gold.push_back("O");
  rare.push_back(false);

  for (size_t i = 0; i < tokens.size(); ++i) {
    const bool punct = std::ispunct(static_cast<unsigned char>(tokens[i][0]));
    if (i > 0 && !(punct && Uniform() < config_.attach_punctuation_rate)) {
      out.text += ' ';
    }
    out.text += tokens[i];
  }

  std::vector<std::string> pred = gold;
  for (size_t i = 0; i < pred.size(); ++i) {
    const bool entity = gold[i] != "O";
    const double p = entity     ? config_.entity_error_rate
                     : rare[i] ? config_.rare_error_rate
                               : config_.common_error_rate;
    if (static_cast<double>(tagger_rng_() >> 11) * 0x1.0p-53 < p) {
      pred[i] = entity ? "O" : "B-MISC";
    }
  }
  out.labeled.pred = std::move(pred);
  return out;
}

std::vector<SyntheticSentence> SyntheticCorpus::GenerateBytes(size_t bytes) {
  std::vector<SyntheticSentence> out;
  size_t produced = 0;
  while (produced < bytes) {
    out.push_back(Next());
    produced += out.back().text.size() + 1;
  }
  return out;
}

std::vector<SyntheticSentence> SyntheticCorpus::GenerateSentences(size_t count) {
  std::vector<SyntheticSentence> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(Next());
  return out;
}

void WriteText(const std::vector<SyntheticSentence>& sentences, std::ostream& out) {
  for (const auto& s : sentences) out << s.text << '\n';
}

void WriteConll(const std::vector<SyntheticSentence>& sentences, bool predicted,
                std::ostream& out) {
  for (const auto& s : sentences) {
    const auto& labels = predicted ? *s.labeled.pred : s.labeled.gold;
    for (size_t i = 0; i < s.labeled.tokens.size(); ++i) {
      out << s.labeled.tokens[i] << ' ' << labels[i] << '\n';
    }
    out << '\n';
  }
}

}  // namespace sublab
