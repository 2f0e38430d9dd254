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

#include "sublab/piece_trie.h"

#include <algorithm>
#include <numeric>

namespace sublab {

PieceTrie::PieceTrie() : nodes_(1) {}

PieceTrie::PieceTrie(std::span<const std::u32string> surfaces) : nodes_(1) {
  std::vector<uint32_t> order;
  order.reserve(surfaces.size());
  for (uint32_t i = 0; i < surfaces.size(); ++i) {
    if (!surfaces[i].empty()) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return surfaces[a] < surfaces[b];
  });
  BuildNode(0, surfaces, order, 0);
}

// `order` holds surfaces sharing a common prefix of length `depth`, sorted.
void PieceTrie::BuildNode(uint32_t node, std::span<const std::u32string> surfaces,
                          std::span<const uint32_t> order, size_t depth) {
  size_t i = 0;
  while (i < order.size() && surfaces[order[i]].size() == depth) {
    if (nodes_[node].piece < 0) {
      nodes_[node].piece = static_cast<int32_t>(order[i]);
    }
    ++i;
  }
  struct Group {
    char32_t label;
    size_t begin;
    size_t end;
  };
  std::vector<Group> groups;
  while (i < order.size()) {
    const char32_t label = surfaces[order[i]][depth];
    size_t j = i;
    while (j < order.size() && surfaces[order[j]][depth] == label) ++j;
    groups.push_back({label, i, j});
    i = j;
  }
  if (groups.empty()) return;
  const auto child_begin = static_cast<uint32_t>(nodes_.size());
  nodes_.resize(nodes_.size() + groups.size());
  nodes_[node].child_begin = child_begin;
  nodes_[node].child_count = static_cast<uint32_t>(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) {
    nodes_[child_begin + g].label = groups[g].label;
    BuildNode(child_begin + static_cast<uint32_t>(g), surfaces,
              order.subspan(groups[g].begin, groups[g].end - groups[g].begin),
              depth + 1);
  }
}

uint32_t PieceTrie::FindChild(uint32_t node, char32_t label) const {
  const Node& n = nodes_[node];
  auto first = nodes_.begin() + n.child_begin;
  auto last = first + n.child_count;
  auto it = std::lower_bound(first, last, label, [](const Node& c, char32_t l) {
    return c.label < l;
  });
  if (it == last || it->label != label) return kNone;
  return static_cast<uint32_t>(it - nodes_.begin());
}

int32_t PieceTrie::Find(std::u32string_view surface) const {
  if (surface.empty()) return -1;
  uint32_t node = 0;
  for (char32_t c : surface) {
    node = FindChild(node, c);
    if (node == kNone) return -1;
  }
  return nodes_[node].piece;
}

}  // namespace sublab
