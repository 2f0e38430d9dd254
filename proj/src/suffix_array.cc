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

#include "sublab/suffix_array.h"

#include <algorithm>
#include <numeric>

namespace sublab {

std::vector<int32_t> BuildSuffixArray(std::span<const uint32_t> text) {
  const auto n = static_cast<int32_t>(text.size());
  std::vector<int32_t> sa(n);
  if (n == 0) return sa;

  // Dense initial ranks.
  std::vector<uint32_t> alphabet(text.begin(), text.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<int32_t> rank(n), tmp(n), sa2(n);
  for (int32_t i = 0; i < n; ++i) {
    rank[i] = static_cast<int32_t>(
        std::lower_bound(alphabet.begin(), alphabet.end(), text[i]) -
        alphabet.begin());
  }
  int32_t classes = static_cast<int32_t>(alphabet.size());
  std::vector<int32_t> bucket(std::max(classes, n) + 1);

  // Counting sort by first symbol.
  std::fill(bucket.begin(), bucket.end(), 0);
  for (int32_t i = 0; i < n; ++i) ++bucket[rank[i]];
  std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
  for (int32_t i = n - 1; i >= 0; --i) sa[--bucket[rank[i]]] = i;

  for (int32_t k = 1; classes < n; k <<= 1) {
    // Order by the second half: suffixes without one come first.
    int32_t p = 0;
    for (int32_t i = n - k; i < n; ++i) sa2[p++] = i;
    for (int32_t r = 0; r < n; ++r) {
      if (sa[r] >= k) sa2[p++] = sa[r] - k;
    }
    // Stable counting sort by the first half.
    std::fill(bucket.begin(), bucket.begin() + classes + 1, 0);
    for (int32_t i = 0; i < n; ++i) ++bucket[rank[i]];
    std::partial_sum(bucket.begin(), bucket.begin() + classes + 1,
                     bucket.begin());
    for (int32_t r = n - 1; r >= 0; --r) sa[--bucket[rank[sa2[r]]]] = sa2[r];

    tmp[sa[0]] = 0;
    classes = 1;
    for (int32_t r = 1; r < n; ++r) {
      const int32_t a = sa[r - 1];
      const int32_t b = sa[r];
      const int32_t ra = a + k < n ? rank[a + k] : -1;
      const int32_t rb = b + k < n ? rank[b + k] : -1;
      if (rank[a] != rank[b] || ra != rb) ++classes;
      tmp[b] = classes - 1;
    }
    rank.swap(tmp);
  }
  return sa;
}

std::vector<int32_t> BuildLcpArray(std::span<const uint32_t> text,
                                   std::span<const int32_t> sa) {
  const auto n = static_cast<int32_t>(text.size());
  std::vector<int32_t> lcp(n, 0);
  std::vector<int32_t> rank(n);
  for (int32_t r = 0; r < n; ++r) rank[sa[r]] = r;
  int32_t h = 0;
  for (int32_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const int32_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace sublab
