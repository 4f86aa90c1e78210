#include "caterpillar/enumerate.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace caterpillar {

namespace {

// Sizes up to these limits keep fully materialized (structure-shared)
// tables; larger sizes are streamed by composing the memoized parts, so an
// enumeration at the cap cannot exhaust memory.
constexpr int kOrderedMemoLimit = 13;
constexpr int kUnorderedMemoLimit = 18;

std::mutex g_memo_mutex;

const std::vector<detail::NodePtr>& ordered_memo(int n) {
  static std::vector<std::vector<detail::NodePtr>> memo;  // guarded by g_memo_mutex
  if (static_cast<int>(memo.size()) < n) {
    if (memo.empty()) memo.push_back({detail::leaf_node()});
    for (int m = static_cast<int>(memo.size()) + 1; m <= n; ++m) {
      std::vector<detail::NodePtr> trees;
      for (int i = 1; i < m; ++i)
        for (const auto& l : memo[i - 1])
          for (const auto& r : memo[m - i - 1])
            trees.push_back(detail::internal_node(l, r));
      memo.push_back(std::move(trees));
    }
  }
  return memo[n - 1];
}

const std::vector<detail::NodePtr>& unordered_memo(int n) {
  static std::vector<std::vector<detail::NodePtr>> memo;  // guarded by g_memo_mutex
  if (static_cast<int>(memo.size()) < n) {
    if (memo.empty()) memo.push_back({detail::leaf_node()});
    for (int m = static_cast<int>(memo.size()) + 1; m <= n; ++m) {
      std::vector<detail::NodePtr> trees;
      for (int i = 1; i + i <= m; ++i) {
        const auto& small = memo[i - 1];
        const auto& big = memo[m - i - 1];
        for (std::size_t a = 0; a < small.size(); ++a) {
          std::size_t b0 = (i + i == m) ? a : 0;
          for (std::size_t b = b0; b < big.size(); ++b)
            trees.push_back(detail::internal_node(small[a], big[b]));
        }
      }
      memo.push_back(std::move(trees));
    }
  }
  return memo[n - 1];
}

void stream_ordered(int n, const std::function<void(detail::NodePtr)>& visit) {
  if (n <= kOrderedMemoLimit) {
    const std::vector<detail::NodePtr>* trees;
    {
      std::lock_guard<std::mutex> lock(g_memo_mutex);
      trees = &ordered_memo(n);
    }
    for (const auto& t : *trees) visit(t);
    return;
  }
  for (int i = 1; i < n; ++i)
    stream_ordered(i, [&](detail::NodePtr l) {
      // l stays live across the whole inner stream
      stream_ordered(n - i, [&](detail::NodePtr r) {
        visit(detail::internal_node(l, std::move(r)));
      });
    });
}

void stream_unordered(int n, const std::function<void(detail::NodePtr)>& visit) {
  if (n <= kUnorderedMemoLimit) {
    const std::vector<detail::NodePtr>* trees;
    {
      std::lock_guard<std::mutex> lock(g_memo_mutex);
      trees = &unordered_memo(n);
    }
    for (const auto& t : *trees) visit(t);
    return;
  }
  for (int i = 1; i + i <= n; ++i)
    stream_unordered(i, [&](detail::NodePtr a) {
      stream_unordered(n - i, [&](detail::NodePtr b) {
        if (i + i == n && detail::compare(a, b) > 0) return;  // unordered pair once
        visit(detail::internal_node(a, std::move(b)));
      });
    });
}

void check_cap(int n, TreeFamily family, std::optional<int> cap) {
  if (n < 1)
    throw Error(ErrorCode::InvalidInput, "tree size must be positive, got " + std::to_string(n));
  int limit = cap ? *cap : enumeration_cap(family);
  if (n > limit)
    throw Error(ErrorCode::CapExceeded,
                "enumeration of size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limit) + " (override with CATERPILLAR_MAX_N)");
}

}  // namespace

int enumeration_cap(TreeFamily family) {
  if (const char* env = std::getenv("CATERPILLAR_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return family == TreeFamily::ordered ? 18 : 20;
}

void for_each_ordered(int n, const std::function<void(const OrderedTree&)>& visit,
                      std::optional<int> cap) {
  check_cap(n, TreeFamily::ordered, cap);
  stream_ordered(n, [&](detail::NodePtr node) { visit(OrderedTree::adopt(std::move(node))); });
}

void for_each_unordered(int n, const std::function<void(const UnorderedTree&)>& visit,
                        std::optional<int> cap) {
  check_cap(n, TreeFamily::unordered, cap);
  stream_unordered(n, [&](detail::NodePtr node) { visit(UnorderedTree::adopt(std::move(node))); });
}

std::vector<OrderedTree> enumerate_ordered(int n, std::optional<int> cap) {
  std::vector<OrderedTree> out;
  for_each_ordered(n, [&](const OrderedTree& t) { out.push_back(t); }, cap);
  return out;
}

std::vector<UnorderedTree> enumerate_unordered(int n, std::optional<int> cap) {
  std::vector<UnorderedTree> out;
  for_each_unordered(n, [&](const UnorderedTree& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace caterpillar
