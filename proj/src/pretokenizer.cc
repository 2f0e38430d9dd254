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

#include "sublab/pretokenizer.h"

#include "sublab/utf8.h"

namespace sublab {

PreTokenizedWord MakeWordInitial(std::string_view token) {
  PreTokenizedWord word;
  word.surface.reserve(token.size() + kMarkerUtf8.size());
  word.surface.append(kMarkerUtf8);
  word.surface.append(token);
  word.char_len = CharLength(word.surface);
  return word;
}

std::vector<PreTokenizedWord> Pretokenize(std::string_view sentence) {
  std::vector<PreTokenizedWord> words;
  if (sentence.empty()) return words;
  size_t begin = 0;
  while (true) {
    const size_t end = sentence.find(' ', begin);
    words.push_back(MakeWordInitial(sentence.substr(
        begin, end == std::string_view::npos ? std::string_view::npos
                                             : end - begin)));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return words;
}

std::string Detokenize(std::span<const std::string> surfaces) {
  std::string out;
  for (const auto& s : surfaces) {
    size_t pos = 0;
    while (pos < s.size()) {
      const size_t hit = s.find(kMarkerUtf8, pos);
      if (hit == std::string::npos) {
        out.append(s, pos);
        break;
      }
      out.append(s, pos, hit - pos);
      out.push_back(' ');
      pos = hit + kMarkerUtf8.size();
    }
  }
  if (!out.empty() && out.front() == ' ') out.erase(0, 1);
  return out;
}

std::string Detokenize(std::span<const PreTokenizedWord> words) {
  std::vector<std::string> surfaces;
  surfaces.reserve(words.size());
  for (const auto& w : words) surfaces.push_back(w.surface);
  return Detokenize(surfaces);
}

}  // namespace sublab
