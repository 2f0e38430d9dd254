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

#ifndef SUBLAB_STRING_UTIL_H_
#define SUBLAB_STRING_UTIL_H_

#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <fmt/format.h>

namespace sublab {
namespace string_util {

template <typename T>
void AppendPiece(std::string* out, const T& value) {
  if constexpr (std::is_convertible_v<const T&, std::string_view>) {
    out->append(std::string_view(value));
  } else if constexpr (requires {
                         { value.data() } -> std::convertible_to<const char*>;
                         value.size();
                       }) {
    out->append(value.data(), value.size());
  } else if constexpr (std::is_same_v<T, char>) {
    out->push_back(value);
  } else {
    fmt::format_to(std::back_inserter(*out), "{}", value);
  }
}

}  // namespace string_util

template <typename... Args>
void StrAppend(std::string* out, const Args&... args) {
  (string_util::AppendPiece(out, args), ...);
}

template <typename... Args>
std::string StrCat(const Args&... args) {
  std::string out;
  StrAppend(&out, args...);
  return out;
}

// Splits on any of `delims`, dropping empty fields.
std::vector<std::string_view> SplitAny(std::string_view text,
                                       std::string_view delims);

}  // namespace sublab

#endif  // SUBLAB_STRING_UTIL_H_
