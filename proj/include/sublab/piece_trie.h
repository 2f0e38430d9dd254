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

#ifndef SUBLAB_PIECE_TRIE_H_
#define SUBLAB_PIECE_TRIE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sublab {

// Immutable code-point trie mapping piece surfaces to ids. Children of a node
// are stored contiguously and sorted by label, so lookups binary-search.
class PieceTrie {
 public:
  PieceTrie();
  // Piece i gets id i. Empty surfaces are ignored; for duplicates the first
  // id wins.
  explicit PieceTrie(std::span<const std::u32string> surfaces);

  // Calls fn(length, id) for every piece that is a prefix of `text`, in
  // increasing length order.
  template <typename Fn>
  void ForEachPrefix(std::u32string_view text, Fn&& fn) const {
    uint32_t node = 0;
    for (size_t k = 0; k < text.size(); ++k) {
      node = FindChild(node, text[k]);
      if (node == kNone) return;
      if (nodes_[node].piece >= 0) fn(k + 1, nodes_[node].piece);
    }
  }

  // Returns the id of `surface`, or -1.
  int32_t Find(std::u32string_view surface) const;

  size_t num_nodes() const { return nodes_.size(); }

 private:
  static constexpr uint32_t kNone = UINT32_MAX;

  struct Node {
    char32_t label = 0;
    uint32_t child_begin = 0;
    uint32_t child_count = 0;
    int32_t piece = -1;
  };

  uint32_t FindChild(uint32_t node, char32_t label) const;
  void BuildNode(uint32_t node, std::span<const std::u32string> surfaces,
                 std::span<const uint32_t> order, size_t depth);

  std::vector<Node> nodes_;
};

}  // namespace sublab

#endif  // SUBLAB_PIECE_TRIE_H_
