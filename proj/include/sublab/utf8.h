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

#ifndef SUBLAB_UTF8_H_
#define SUBLAB_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace sublab {

// Word-boundary marker U+2581 (LOWER ONE EIGHTH BLOCK).
inline constexpr char32_t kMarker = U'▁';
inline constexpr std::string_view kMarkerUtf8 = "\xE2\x96\x81";

// U+FFFD, emitted when decoding unknown pieces.
inline constexpr std::string_view kReplacementUtf8 = "\xEF\xBF\xBD";

// Returns the byte offset of the first malformed sequence, or nullopt if
// `text` is well-formed UTF-8 (overlongs, surrogates and values above
// U+10FFFF are malformed).
std::optional<size_t> FindInvalidUtf8(std::string_view text);

// Decodes well-formed UTF-8. Malformed bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

void AppendUtf8(char32_t c, std::string* out);
std::string EncodeUtf8(std::u32string_view text);

// Number of Unicode scalar values in well-formed UTF-8.
size_t CharLength(std::string_view text);

}  // namespace sublab

#endif  // SUBLAB_UTF8_H_
