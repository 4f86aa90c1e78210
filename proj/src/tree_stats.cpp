#include "caterpillar/tree_stats.hpp"

#include <cstdlib>
#include <vector>

namespace caterpillar {

namespace {

struct GammaInfo {
  bool caterpillar;
  std::int64_t gamma;
};

// One post-order pass; explicit stack so deep combs are fine.
GammaInfo gamma_walk(const detail::TreeNode* root) {
  struct Frame {
    const detail::TreeNode* node;
    int stage = 0;
  };
  std::vector<Frame> stack{{root}};
  std::vector<GammaInfo> results;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!f.node->left) {
      results.push_back({true, 1});
      stack.pop_back();
    } else if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({f.node->left.get()});
    } else if (f.stage == 1) {
      f.stage = 2;
      stack.push_back({f.node->right.get()});
    } else {
      GammaInfo right = results.back();
      results.pop_back();
      GammaInfo left = results.back();
      results.pop_back();
      bool cat = (f.node->left->n_leaves == 1 && right.caterpillar) ||
                 (f.node->right->n_leaves == 1 && left.caterpillar);
      std::int64_t g = std::max(left.gamma, right.gamma);
      if (cat) g = std::max(g, f.node->n_leaves);
      results.push_back({cat, g});
      stack.pop_back();
    }
  }
  return results.back();
}

std::int64_t colless_sum(const detail::TreeNode* root) {
  std::int64_t sum = 0;
  std::vector<const detail::TreeNode*> stack{root};
  while (!stack.empty()) {
    const detail::TreeNode* node = stack.back();
    stack.pop_back();
    if (!node->left) continue;
    sum += std::abs(node->left->n_leaves - node->right->n_leaves);
    stack.push_back(node->left.get());
    stack.push_back(node->right.get());
  }
  return sum;
}

BigRat colless_impl(const detail::TreeNode* root) {
  std::int64_t n = root->n_leaves;
  if (n <= 2)
    throw Error(ErrorCode::SizeTooSmall,
                "Colless index needs more than 2 leaves, got " + std::to_string(n));
  // max of the sum is (n-1)(n-2)/2, attained exactly by caterpillars
  return BigRat(2 * colless_sum(root), (n - 1) * (n - 2));
}

}  // namespace

bool is_caterpillar(const OrderedTree& tree) { return gamma_walk(tree.node().get()).caterpillar; }
bool is_caterpillar(const UnorderedTree& tree) { return gamma_walk(tree.node().get()).caterpillar; }

std::int64_t gamma(const OrderedTree& tree) { return gamma_walk(tree.node().get()).gamma; }
std::int64_t gamma(const UnorderedTree& tree) { return gamma_walk(tree.node().get()).gamma; }

BigRat colless_index(const OrderedTree& tree) { return colless_impl(tree.node().get()); }
BigRat colless_index(const UnorderedTree& tree) { return colless_impl(tree.node().get()); }

}  // namespace caterpillar
