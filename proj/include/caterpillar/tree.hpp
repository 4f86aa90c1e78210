#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "caterpillar/errors.hpp"

namespace caterpillar {

enum class TreeFamily { ordered, unordered };

namespace detail {

// Shared immutable node; left/right are both null exactly for a leaf.
// Subtrees are shared freely (the enumerators build DAGs), so nodes are
// never mutated after construction and destruction is iterative to keep
// deep combs from overflowing the stack.
struct TreeNode {
  std::shared_ptr<const TreeNode> left;
  std::shared_ptr<const TreeNode> right;
  std::int64_t n_leaves = 1;
};

using NodePtr = std::shared_ptr<const TreeNode>;

NodePtr leaf_node();
NodePtr internal_node(NodePtr left, NodePtr right);

// Canonical total order: by size first, then children lexicographically;
// equal sizes with both leaves compare equal. Iterative.
int compare(const NodePtr& a, const NodePtr& b);

bool structural_equal(const NodePtr& a, const NodePtr& b);

}  // namespace detail

// Path from the root; false = left step, true = right step.
using NodeId = std::vector<bool>;

class UnorderedTree;

// Full binary tree with distinguished left/right children, counted by leaves.
class OrderedTree {
 public:
  static OrderedTree leaf() { return OrderedTree(detail::leaf_node()); }
  static OrderedTree internal(const OrderedTree& left, const OrderedTree& right) {
    return OrderedTree(detail::internal_node(left.node_, right.node_));
  }

  bool is_leaf() const { return node_->left == nullptr; }
  OrderedTree left() const;
  OrderedTree right() const;
  std::int64_t n_leaves() const { return node_->n_leaves; }

  // Subtree addressed by a root path; throws IndexOutOfRange if the path
  // walks off the tree.
  OrderedTree subtree_at(const NodeId& path) const;

  bool operator==(const OrderedTree& other) const {
    return detail::structural_equal(node_, other.node_);
  }

  const detail::NodePtr& node() const { return node_; }

  // Library-internal: wrap an existing node without copying.
  static OrderedTree adopt(detail::NodePtr node) { return OrderedTree(std::move(node)); }

 private:
  friend class UnorderedTree;
  explicit OrderedTree(detail::NodePtr node) : node_(std::move(node)) {}
  detail::NodePtr node_;
};

// Sibling-order-free tree held in canonical form: at every internal node the
// children satisfy compare(childA, childB) <= 0.
class UnorderedTree {
 public:
  static UnorderedTree leaf() { return UnorderedTree(detail::leaf_node()); }
  static UnorderedTree internal(const UnorderedTree& a, const UnorderedTree& b);

  bool is_leaf() const { return node_->left == nullptr; }
  UnorderedTree child_a() const;
  UnorderedTree child_b() const;
  std::int64_t n_leaves() const { return node_->n_leaves; }

  // Reads the canonical form as an ordered tree (childA on the left).
  OrderedTree as_ordered() const { return OrderedTree(node_); }

  bool operator==(const UnorderedTree& other) const {
    return detail::structural_equal(node_, other.node_);
  }
  bool operator<(const UnorderedTree& other) const {
    return detail::compare(node_, other.node_) < 0;
  }

  const detail::NodePtr& node() const { return node_; }

  // Library-internal: wrap a node already in canonical form.
  static UnorderedTree adopt(detail::NodePtr node) { return UnorderedTree(std::move(node)); }

 private:
  friend UnorderedTree canonicalize(const OrderedTree& tree);
  explicit UnorderedTree(detail::NodePtr node) : node_(std::move(node)) {}
  detail::NodePtr node_;
};

// Forgets sibling order; invariant under any sequence of child swaps.
UnorderedTree canonicalize(const OrderedTree& tree);

// Swaps every pair of children.
OrderedTree mirror(const OrderedTree& tree);

std::int64_t size(const OrderedTree& tree);
std::int64_t size(const UnorderedTree& tree);

}  // namespace caterpillar
