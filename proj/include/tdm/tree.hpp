// Copyright 2026 The tdm Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdm/errors.hpp"

namespace tdm {

using NodeId = std::uint64_t;
using ItemId = std::uint64_t;
using UserId = std::uint64_t;

inline constexpr NodeId kNoNode = ~std::uint64_t{0};
inline constexpr ItemId kNoItem = ~std::uint64_t{0};

struct TreeNode {
  NodeId parent = kNoNode;       // kNoNode for the root
  NodeId first_child = kNoNode;  // children occupy [first_child, first_child+child_count)
  std::uint32_t child_count = 0;
  std::uint32_t level = 1;       // root is level 1
  ItemId item = kNoItem;         // set iff leaf
};

/// The leveled recommendation tree. Immutable once built. Node ids are dense
/// and assigned level-order, so every node's children are contiguous and each
/// level is a contiguous id range.
class TreeIndex {
 public:
  TreeIndex() = default;

  /// Builds a canonical index from an arbitrary-id description: children[t]
  /// lists the (ordered) children of temporary node t, item[t] gives a leaf's
  /// item. Validates the single-root / bijection / leaf-item invariants.
  static TreeIndex from_children(std::size_t root,
                                 const std::vector<std::vector<std::size_t>>& children,
                                 const std::vector<ItemId>& item_of);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const { return item_map_.size(); }
  NodeId root() const { return 0; }
  std::uint32_t max_level() const { return max_level_; }

  const TreeNode& node(NodeId id) const {
    require(id < nodes_.size(), "node id out of range: ", id);
    return nodes_[id];
  }
  bool is_leaf(NodeId id) const { return node(id).child_count == 0; }
  std::uint32_t level(NodeId id) const { return node(id).level; }
  NodeId parent(NodeId id) const { return node(id).parent; }

  /// Children of a node as a contiguous id range [begin, end).
  std::pair<NodeId, NodeId> children(NodeId id) const {
    const TreeNode& n = node(id);
    if (n.child_count == 0) return {kNoNode, kNoNode};
    return {n.first_child, n.first_child + n.child_count};
  }

  /// The unique ancestor of `id` at level j (the node itself when
  /// j == level(id)). 1 <= j <= level(id).
  NodeId ancestor_at_level(NodeId id, std::uint32_t j) const;

  /// Root-to-leaf branch string for binary trees: first child = '1',
  /// second = '0'. Length is level(leaf) - 1.
  std::string encoding(NodeId leaf) const;

  /// All node ids at level j, ascending. 1 <= j <= max_level().
  std::vector<NodeId> level_nodes(std::uint32_t j) const;
  /// Same as level_nodes but as the contiguous [begin, end) id range.
  std::pair<NodeId, NodeId> level_range(std::uint32_t j) const;
  std::size_t level_width(std::uint32_t j) const;

  NodeId leaf_of_item(ItemId item) const;
  /// kNoNode when the item is not indexed.
  NodeId find_leaf_of_item(ItemId item) const;
  ItemId item_of_leaf(NodeId leaf) const;

  /// (item, leaf) pairs sorted ascending by item id.
  const std::vector<std::pair<ItemId, NodeId>>& item_map() const {
    return item_map_;
  }

  void save(const std::string& path) const;
  static TreeIndex load(const std::string& path);

  bool structurally_equal(const TreeIndex& other) const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<NodeId> level_begin_;  // level_begin_[j] = first id at level j; size max_level_+2
  std::vector<std::pair<ItemId, NodeId>> item_map_;
  std::uint32_t max_level_ = 0;
};

}  // namespace tdm
