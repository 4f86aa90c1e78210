#include "caterpillar/bijection.hpp"

#include <algorithm>
#include <vector>

#include "caterpillar/enumerate.hpp"

namespace caterpillar {

Permutation phi(const OrderedTree& tree) {
  if (tree.is_leaf())
    throw Error(ErrorCode::SizeTooSmall, "the bijection needs a tree of size >= 2");
  // pre-order rank (descending) emitted at the in-order position; one
  // explicit-stack walk does both
  struct Frame {
    const detail::TreeNode* node;
    int stage = 0;
    int label = 0;
  };
  int counter = static_cast<int>(tree.n_leaves()) - 1;  // internal node count
  std::vector<int> out;
  out.reserve(counter);
  std::vector<Frame> stack{{tree.node().get()}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!f.node->left) {
      stack.pop_back();
    } else if (f.stage == 0) {
      f.label = counter--;  // pre-order visit
      f.stage = 1;
      stack.push_back({f.node->left.get()});
    } else if (f.stage == 1) {
      out.push_back(f.label);  // in-order emit
      f.stage = 2;
      stack.push_back({f.node->right.get()});
    } else {
      stack.pop_back();
    }
  }
  return Permutation(std::move(out));
}

namespace {

// Max-Cartesian rebuild over [lo, hi): the maximum entry is the subtree
// root, entries on its sides are the child blocks.
detail::NodePtr build_from_range(const std::vector<int>& a, int lo, int hi) {
  struct Frame {
    int lo, hi;
    int stage = 0;
    int mid = 0;
  };
  std::vector<Frame> stack{{lo, hi}};
  std::vector<detail::NodePtr> results;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.lo == f.hi) {
      results.push_back(detail::leaf_node());
      stack.pop_back();
    } else if (f.stage == 0) {
      f.mid = static_cast<int>(std::max_element(a.begin() + f.lo, a.begin() + f.hi) - a.begin());
      f.stage = 1;
      stack.push_back({f.lo, f.mid});
    } else if (f.stage == 1) {
      f.stage = 2;
      stack.push_back({f.mid + 1, f.hi});
    } else {
      detail::NodePtr right = std::move(results.back());
      results.pop_back();
      detail::NodePtr left = std::move(results.back());
      results.pop_back();
      results.push_back(detail::internal_node(std::move(left), std::move(right)));
      stack.pop_back();
    }
  }
  return std::move(results.back());
}

bool window_avoids_231(const std::vector<int>& a, int lo, int hi) {
  // reversed-position scan turns 231 into 132; works on raw values since
  // containment only depends on relative order
  int third = 0;  // values are >= 1
  std::vector<int> stack;
  for (int j = lo; j <= hi; ++j) {
    if (a[j] < third) return false;
    while (!stack.empty() && stack.back() < a[j]) {
      third = stack.back();
      stack.pop_back();
    }
    stack.push_back(a[j]);
  }
  return true;
}

}  // namespace

OrderedTree phi_inverse(const Permutation& p) {
  if (auto w = find_132(p)) throw NotAv132Error((*w)[0], (*w)[1], (*w)[2]);
  return OrderedTree::adopt(build_from_range(p.entries(), 0, p.size()));
}

std::int64_t gamma_from_perm(const Permutation& p) {
  if (auto w = find_132(p)) throw NotAv132Error((*w)[0], (*w)[1], (*w)[2]);
  const std::vector<int>& a = p.entries();
  int n = p.size();
  std::int64_t best = 0;
  for (int i = 0; i < n; ++i) {
    int lo = i, hi = i;
    while (lo > 0 && a[lo - 1] <= a[i]) --lo;
    while (hi + 1 < n && a[hi + 1] <= a[i]) ++hi;
    if (hi - lo + 1 <= best) continue;
    if (window_avoids_231(a, lo, hi)) best = hi - lo + 1;
  }
  return best;
}

void for_each_av132(int n, const std::function<void(const Permutation&)>& visit,
                    std::optional<int> cap) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  std::optional<int> tree_cap = cap ? std::optional<int>(*cap + 1) : std::nullopt;
  for_each_ordered(n + 1, [&](const OrderedTree& t) { visit(phi(t)); }, tree_cap);
}

BigInt count_all_rtilde_contain_231(int n, std::optional<int> cap) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  int limit = cap ? *cap : 12;
  if (n > limit)
    throw Error(ErrorCode::CapExceeded,
                "filtering Av_" + std::to_string(n) + "(132) exceeds cap " +
                    std::to_string(limit));
  BigInt count = 0;
  for_each_av132(
      n,
      [&](const Permutation& p) {
        const std::vector<int>& a = p.entries();
        for (int i = 0; i < n; ++i) {
          int lo = i, hi = i;
          while (lo > 0 && a[lo - 1] <= a[i]) --lo;
          while (hi + 1 < n && a[hi + 1] <= a[i]) ++hi;
          if (hi > lo && window_avoids_231(a, lo, hi)) return;  // reject
        }
        ++count;
      },
      std::optional<int>(limit));
  return count;
}

}  // namespace caterpillar
