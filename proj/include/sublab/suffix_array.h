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

#ifndef SUBLAB_SUFFIX_ARRAY_H_
#define SUBLAB_SUFFIX_ARRAY_H_

#include <cstdint>
#include <span>
#include <vector>

namespace sublab {

// Suffix array by prefix doubling with radix sorting, O(n log n).
// Symbols are arbitrary 32-bit values compared numerically.
std::vector<int32_t> BuildSuffixArray(std::span<const uint32_t> text);

// lcp[r] = longest common prefix of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
// Kasai et al., linear time.
std::vector<int32_t> BuildLcpArray(std::span<const uint32_t> text,
                                   std::span<const int32_t> sa);

}  // namespace sublab

#endif  // SUBLAB_SUFFIX_ARRAY_H_
