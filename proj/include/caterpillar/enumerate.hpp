#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "caterpillar/tree.hpp"

namespace caterpillar {

// Enumeration cap for exhaustive generators: 18 ordered / 20 unordered by
// default, both overridable with the CATERPILLAR_MAX_N environment variable.
int enumeration_cap(TreeFamily family);

// Visit each tree of the family with n leaves exactly once. Counts are
// catalan(n) / wedderburn(n). Throws CapExceeded above the cap.
void for_each_ordered(int n, const std::function<void(const OrderedTree&)>& visit,
                      std::optional<int> cap = std::nullopt);
void for_each_unordered(int n, const std::function<void(const UnorderedTree&)>& visit,
                        std::optional<int> cap = std::nullopt);

// Convenience collectors; prefer the streaming forms above for large n.
std::vector<OrderedTree> enumerate_ordered(int n, std::optional<int> cap = std::nullopt);
std::vector<UnorderedTree> enumerate_unordered(int n, std::optional<int> cap = std::nullopt);

}  // namespace caterpillar
