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

#ifndef SUBLAB_PRETOKENIZER_H_
#define SUBLAB_PRETOKENIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sublab {

// A whitespace-delimited word carrying the U+2581 boundary marker prefix.
struct PreTokenizedWord {
  std::string surface;
  size_t char_len = 0;

  friend bool operator==(const PreTokenizedWord&,
                         const PreTokenizedWord&) = default;
};

// Splits a normalized sentence on U+0020 and prefixes each word with the
// marker. Consecutive spaces (uncollapsed input) yield bare-marker words so
// that Detokenize stays lossless.
std::vector<PreTokenizedWord> Pretokenize(std::string_view sentence);

// Prefixes a single token with the marker, treating it as word-initial.
PreTokenizedWord MakeWordInitial(std::string_view token);

// Concatenates surfaces, replaces markers with spaces and strips one leading
// space.
std::string Detokenize(std::span<const std::string> surfaces);
std::string Detokenize(std::span<const PreTokenizedWord> words);

}  // namespace sublab

#endif  // SUBLAB_PRETOKENIZER_H_
