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

// Writes a deterministic synthetic corpus: raw text plus gold and simulated
// tagger output in CoNLL layout.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sublab/synthetic.h"

int main(int argc, char** argv) {
  sublab::SyntheticConfig config;
  size_t bytes = 1 << 20;
  size_t conll_sentences = 2000;
  std::string text_path = "corpus.txt";
  std::string gold_path;
  std::string pred_path;

  CLI::App app{"Synthetic labeled corpus generator"};
  app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  app.add_option("--bytes", bytes, "Approximate size of the text corpus")
      ->capture_default_str();
  app.add_option("--text", text_path, "Raw text output")->capture_default_str();
  app.add_option("--conll", gold_path, "Gold CoNLL output");
  app.add_option("--pred", pred_path, "Simulated predictions output");
  app.add_option("--conll-sentences", conll_sentences,
                 "Sentences in the CoNLL files (drawn after the text)")
      ->capture_default_str();
  app.add_option("--entity-rate", config.entity_rate)->capture_default_str();
  app.add_option("--stems", config.num_stems)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  sublab::SyntheticCorpus corpus(config);
  {
    std::ofstream out(text_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << text_path << "\n";
      return 1;
    }
    sublab::WriteText(corpus.GenerateBytes(bytes), out);
  }
  if (!gold_path.empty() || !pred_path.empty()) {
    const auto labeled = corpus.GenerateSentences(conll_sentences);
    if (!gold_path.empty()) {
      std::ofstream out(gold_path, std::ios::binary);
      sublab::WriteConll(labeled, false, out);
    }
    if (!pred_path.empty()) {
      std::ofstream out(pred_path, std::ios::binary);
      sublab::WriteConll(labeled, true, out);
    }
  }
  return 0;
}
