#include "caterpillar/tree.hpp"

#include <utility>

namespace caterpillar {
namespace detail {

namespace {

// Iterative teardown: a deleter frame pushes its children onto a
// thread-local stack and the outermost frame drains it, so destroying a
// 10^6-deep comb uses O(1) call stack.
struct NodeDeleter {
  void operator()(const TreeNode* cp) const noexcept {
    thread_local std::vector<NodePtr> pending;
    thread_local bool draining = false;
    auto* n = const_cast<TreeNode*>(cp);
    if (n->left) pending.push_back(std::move(n->left));
    if (n->right) pending.push_back(std::move(n->right));
    delete n;
    if (draining) return;
    draining = true;
    while (!pending.empty()) {
      NodePtr next = std::move(pending.back());
      pending.pop_back();
      // `next` dying here may re-enter this deleter; it only pushes.
    }
    draining = false;
  }
};

}  // namespace

NodePtr leaf_node() {
  static const NodePtr kLeaf = std::make_shared<const TreeNode>();
  return kLeaf;
}

NodePtr internal_node(NodePtr left, NodePtr right) {
  auto* node = new TreeNode{std::move(left), std::move(right), 0};
  node->n_leaves = node->left->n_leaves + node->right->n_leaves;
  return NodePtr(node, NodeDeleter{});
}

int compare(const NodePtr& a, const NodePtr& b) {
  std::vector<std::pair<const TreeNode*, const TreeNode*>> stack;
  stack.emplace_back(a.get(), b.get());
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->n_leaves != y->n_leaves) return x->n_leaves < y->n_leaves ? -1 : 1;
    if (!x->left) continue;  // equal-size leaves
    // right pushed first so the left children compare first
    stack.emplace_back(x->right.get(), y->right.get());
    stack.emplace_back(x->left.get(), y->left.get());
  }
  return 0;
}

bool structural_equal(const NodePtr& a, const NodePtr& b) {
  // In a full binary tree size 1 means leaf, so the size-first compare
  // decides structural equality.
  return compare(a, b) == 0;
}

}  // namespace detail

OrderedTree OrderedTree::left() const {
  if (is_leaf()) throw Error(ErrorCode::InvalidInput, "leaf has no children");
  return OrderedTree(node_->left);
}

OrderedTree OrderedTree::right() const {
  if (is_leaf()) throw Error(ErrorCode::InvalidInput, "leaf has no children");
  return OrderedTree(node_->right);
}

OrderedTree OrderedTree::subtree_at(const NodeId& path) const {
  const detail::TreeNode* cur = node_.get();
  detail::NodePtr held = node_;
  for (bool step : path) {
    if (!cur->left)
      throw Error(ErrorCode::IndexOutOfRange, "node path walks past a leaf");
    held = step ? cur->right : cur->left;
    cur = held.get();
  }
  return OrderedTree(held);
}

UnorderedTree UnorderedTree::internal(const UnorderedTree& a, const UnorderedTree& b) {
  if (detail::compare(a.node_, b.node_) <= 0)
    return UnorderedTree(detail::internal_node(a.node_, b.node_));
  return UnorderedTree(detail::internal_node(b.node_, a.node_));
}

UnorderedTree UnorderedTree::child_a() const {
  if (is_leaf()) throw Error(ErrorCode::InvalidInput, "leaf has no children");
  return UnorderedTree(node_->left);
}

UnorderedTree UnorderedTree::child_b() const {
  if (is_leaf()) throw Error(ErrorCode::InvalidInput, "leaf has no children");
  return UnorderedTree(node_->right);
}

namespace {

// Post-order rebuild with an explicit stack; `transform` receives the two
// rebuilt children of each internal node.
template <typename Combine>
detail::NodePtr rebuild(const detail::NodePtr& root, Combine combine) {
  struct Frame {
    const detail::TreeNode* node;
    int stage = 0;
  };
  std::vector<Frame> stack{{root.get()}};
  std::vector<detail::NodePtr> results;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!f.node->left) {
      results.push_back(detail::leaf_node());
      stack.pop_back();
    } else if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({f.node->left.get()});
    } else if (f.stage == 1) {
      f.stage = 2;
      stack.push_back({f.node->right.get()});
    } else {
      detail::NodePtr right = std::move(results.back());
      results.pop_back();
      detail::NodePtr left = std::move(results.back());
      results.pop_back();
      results.push_back(combine(std::move(left), std::move(right)));
      stack.pop_back();
    }
  }
  return std::move(results.back());
}

}  // namespace

UnorderedTree canonicalize(const OrderedTree& tree) {
  auto node = rebuild(tree.node(), [](detail::NodePtr l, detail::NodePtr r) {
    if (detail::compare(l, r) <= 0) return detail::internal_node(std::move(l), std::move(r));
    return detail::internal_node(std::move(r), std::move(l));
  });
  return UnorderedTree(std::move(node));
}

OrderedTree mirror(const OrderedTree& tree) {
  auto node = rebuild(tree.node(), [](detail::NodePtr l, detail::NodePtr r) {
    return detail::internal_node(std::move(r), std::move(l));
  });
  return OrderedTree::adopt(std::move(node));
}

std::int64_t size(const OrderedTree& tree) { return tree.n_leaves(); }
std::int64_t size(const UnorderedTree& tree) { return tree.n_leaves(); }

}  // namespace caterpillar
