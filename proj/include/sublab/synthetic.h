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

#ifndef SUBLAB_SYNTHETIC_H_
#define SUBLAB_SYNTHETIC_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "sublab/conll.h"

namespace sublab {

// Parameters of a synthetic labeled corpus: Zipfian content words built from
// syllables, a closed set of function words, and rare capitalized entity
// names (PER, ORG, LOC). Output depends only on these fields.
struct SyntheticConfig {
  uint64_t seed = 1;
  int num_stems = 6000;
  int num_entities = 4000;
  double zipf_exponent = 1.05;
  double function_word_rate = 0.35;
  double entity_rate = 0.05;
  double suffix_rate = 0.3;
  double attach_punctuation_rate = 0.5;
  int min_sentence_length = 5;
  int max_sentence_length = 20;
  // Simulated tagger: error probability for entity tokens, content words
  // outside the `common_stems` most frequent, and everything else.
  double entity_error_rate = 0.25;
  double rare_error_rate = 0.08;
  double common_error_rate = 0.01;
  int common_stems = 300;
};

struct SyntheticSentence {
  LabeledSentence labeled;  // tokens, gold BIO labels, simulated predictions
  std::string text;         // raw line, punctuation sometimes attached
};

class SyntheticCorpus {
 public:
  explicit SyntheticCorpus(const SyntheticConfig& config);

  SyntheticSentence Next();

  // Generates sentences until at least `bytes` of text (newlines included)
  // have been produced.
  std::vector<SyntheticSentence> GenerateBytes(size_t bytes);
  std::vector<SyntheticSentence> GenerateSentences(size_t count);

 private:
  struct Entity {
    std::vector<std::string> words;
    std::string type;
  };

  double Uniform();
  size_t Below(size_t n);
  std::string MakeWord(int min_syllables, int max_syllables, bool rare);

  SyntheticConfig config_;
  std::mt19937_64 rng_;
  std::mt19937_64 tagger_rng_;
  std::vector<std::string> stems_;
  std::vector<double> stem_cdf_;
  std::vector<Entity> entities_;
};

// One line per sentence.
void WriteText(const std::vector<SyntheticSentence>& sentences, std::ostream& out);

// "token label" lines, blank line between sentences. With `predicted`, the
// simulated predictions are written in place of the gold labels.
void WriteConll(const std::vector<SyntheticSentence>& sentences, bool predicted,
                std::ostream& out);

}  // namespace sublab

#endif  // SUBLAB_SYNTHETIC_H_
