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

#include "tdm/tree.hpp"

#include <algorithm>
#include <deque>

#include "tdm/binary_io.hpp"

namespace tdm {

TreeIndex TreeIndex::from_children(
    std::size_t root, const std::vector<std::vector<std::size_t>>& children,
    const std::vector<ItemId>& item_of) {
  const std::size_t n = children.size();
  require(n > 0, "tree must have at least one node");
  require(item_of.size() == n, "children/item arrays disagree in size");
  require(root < n, "root id out of range");

  // BFS from the root assigns dense level-order ids; children stay in their
  // given order, so each node's children are contiguous under the new ids.
  std::vector<NodeId> new_id(n, kNoNode);
  std::deque<std::size_t> queue{root};
  std::vector<std::size_t> order;
  order.reserve(n);
  new_id[root] = 0;
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    order.push_back(t);
    for (std::size_t c : children[t]) {
      require(c < n, "child id out of range: ", c);
      require(new_id[c] == kNoNode, "node ", c, " has multiple parents");
      new_id[c] = static_cast<NodeId>(order.size() + queue.size());
      queue.push_back(c);
    }
  }
  require(order.size() == n, "tree is disconnected: reached ", order.size(),
          " of ", n, " nodes from the root");

  TreeIndex tree;
  tree.nodes_.resize(n);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    std::size_t t = order[rank];
    TreeNode& node = tree.nodes_[rank];
    node.item = item_of[t];
    node.child_count = static_cast<std::uint32_t>(children[t].size());
    node.first_child =
        node.child_count == 0 ? kNoNode : new_id[children[t].front()];
    if (rank == 0) {
      node.parent = kNoNode;
      node.level = 1;
    }
    for (std::size_t c : children[t]) {
      tree.nodes_[new_id[c]].parent = static_cast<NodeId>(rank);
    }
  }
  for (std::size_t id = 1; id < n; ++id) {
    tree.nodes_[id].level = tree.nodes_[tree.nodes_[id].parent].level + 1;
  }

  tree.max_level_ = 0;
  for (const TreeNode& node : tree.nodes_) {
    tree.max_level_ = std::max(tree.max_level_, node.level);
    if (node.child_count == 0) {
      require(node.item != kNoItem, "leaf node without an item");
    } else {
      require(node.item == kNoItem, "internal node carries an item");
    }
  }

  tree.level_begin_.assign(tree.max_level_ + 2, 0);
  for (const TreeNode& node : tree.nodes_) tree.level_begin_[node.level + 1]++;
  for (std::size_t j = 1; j < tree.level_begin_.size(); ++j) {
    tree.level_begin_[j] += tree.level_begin_[j - 1];
  }

  for (NodeId id = 0; id < n; ++id) {
    if (tree.nodes_[id].child_count == 0) {
      tree.item_map_.emplace_back(tree.nodes_[id].item, id);
    }
  }
  std::sort(tree.item_map_.begin(), tree.item_map_.end());
  for (std::size_t i = 1; i < tree.item_map_.size(); ++i) {
    require(tree.item_map_[i].first != tree.item_map_[i - 1].first,
            "item ", tree.item_map_[i].first, " mapped to multiple leaves");
  }
  return tree;
}

NodeId TreeIndex::ancestor_at_level(NodeId id, std::uint32_t j) const {
  const TreeNode& n = node(id);
  require(j >= 1 && j <= n.level, "ancestor level ", j,
          " out of range for node ", id, " at level ", n.level);
  NodeId cur = id;
  for (std::uint32_t l = n.level; l > j; --l) cur = nodes_[cur].parent;
  return cur;
}

std::string TreeIndex::encoding(NodeId leaf) const {
  require(is_leaf(leaf), "encoding requested for non-leaf node ", leaf);
  std::string bits;
  NodeId cur = leaf;
  while (nodes_[cur].parent != kNoNode) {
    const TreeNode& p = nodes_[nodes_[cur].parent];
    require(p.child_count <= 2,
            "encoding is only defined for binary trees; node ",
            nodes_[cur].parent, " has ", p.child_count, " children");
    bits.push_back(cur == p.first_child ? '1' : '0');
    cur = nodes_[cur].parent;
  }
  std::reverse(bits.begin(), bits.end());
  return bits;
}

std::pair<NodeId, NodeId> TreeIndex::level_range(std::uint32_t j) const {
  require(j >= 1 && j <= max_level_, "level ", j, " out of range [1, ",
          max_level_, "]");
  return {level_begin_[j], level_begin_[j + 1]};
}

std::vector<NodeId> TreeIndex::level_nodes(std::uint32_t j) const {
  auto [lo, hi] = level_range(j);
  std::vector<NodeId> out;
  out.reserve(hi - lo);
  for (NodeId id = lo; id < hi; ++id) out.push_back(id);
  return out;
}

std::size_t TreeIndex::level_width(std::uint32_t j) const {
  auto [lo, hi] = level_range(j);
  return hi - lo;
}

NodeId TreeIndex::find_leaf_of_item(ItemId item) const {
  auto it = std::lower_bound(
      item_map_.begin(), item_map_.end(), item,
      [](const std::pair<ItemId, NodeId>& e, ItemId v) { return e.first < v; });
  if (it == item_map_.end() || it->first != item) return kNoNode;
  return it->second;
}

NodeId TreeIndex::leaf_of_item(ItemId item) const {
  NodeId id = find_leaf_of_item(item);
  require(id != kNoNode, "item not indexed: ", item);
  return id;
}

ItemId TreeIndex::item_of_leaf(NodeId leaf) const {
  const TreeNode& n = node(leaf);
  require(n.child_count == 0, "node ", leaf, " is not a leaf");
  return n.item;
}

namespace {
constexpr char kTreeMagic[4] = {'T', 'D', 'M', 'T'};
constexpr std::uint32_t kTreeVersion = 1;
}  // namespace

void TreeIndex::save(const std::string& path) const {
  BinaryWriter w(path);
  w.write_magic(kTreeMagic);
  w.write_u32(kTreeVersion);
  w.write_u64(nodes_.size());
  w.write_u32(max_level_);
  for (const TreeNode& n : nodes_) {
    w.write_u64(n.parent);
    w.write_u64(n.first_child);
    w.write_u32(n.child_count);
    w.write_u32(n.level);
    w.write_u64(n.item);
  }
  w.write_u64(item_map_.size());
  for (const auto& [item, leaf] : item_map_) {
    w.write_u64(item);
    w.write_u64(leaf);
  }
  w.finish_with_checksum();
}

TreeIndex TreeIndex::load(const std::string& path) {
  BinaryReader r(path);
  r.expect_magic(kTreeMagic, "tree file");
  std::uint32_t version = r.read_u32();
  require(version == kTreeVersion, "tree file ", path,
          ": unsupported version ", version, " (expected ", kTreeVersion, ")");
  TreeIndex tree;
  std::uint64_t count = r.read_u64();
  tree.max_level_ = r.read_u32();
  tree.nodes_.resize(count);
  for (TreeNode& n : tree.nodes_) {
    n.parent = r.read_u64();
    n.first_child = r.read_u64();
    n.child_count = r.read_u32();
    n.level = r.read_u32();
    n.item = r.read_u64();
  }
  std::uint64_t map_count = r.read_u64();
  tree.item_map_.resize(map_count);
  for (auto& [item, leaf] : tree.item_map_) {
    item = r.read_u64();
    leaf = r.read_u64();
  }
  r.verify_checksum("tree file");

  tree.level_begin_.assign(tree.max_level_ + 2, 0);
  for (const TreeNode& n : tree.nodes_) {
    require(n.level >= 1 && n.level <= tree.max_level_, "tree file ", path,
            ": node level out of range");
    tree.level_begin_[n.level + 1]++;
  }
  for (std::size_t j = 1; j < tree.level_begin_.size(); ++j) {
    tree.level_begin_[j] += tree.level_begin_[j - 1];
  }
  return tree;
}

bool TreeIndex::structurally_equal(const TreeIndex& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  if (item_map_ != other.item_map_) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const TreeNode& a = nodes_[i];
    const TreeNode& b = other.nodes_[i];
    if (a.parent != b.parent || a.first_child != b.first_child ||
        a.child_count != b.child_count || a.level != b.level ||
        a.item != b.item) {
      return false;
    }
  }
  return true;
}

}  // namespace tdm
