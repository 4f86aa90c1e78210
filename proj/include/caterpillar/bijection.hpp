#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "caterpillar/numbers.hpp"
#include "caterpillar/permutation.hpp"
#include "caterpillar/tree.hpp"

namespace caterpillar {

// The bijection from ordered trees with n+1 leaves onto the 132-avoiding
// permutations of size n: label internal nodes n, n-1, ... in pre-order and
// read the labels in-order. Throws SizeTooSmall for a lone leaf.
Permutation phi(const OrderedTree& tree);

// Inverse direction; the entry structure is the max-Cartesian decomposition.
// Throws NotAv132 (with witness positions) when the input contains 132.
OrderedTree phi_inverse(const Permutation& p);

// Size of the biggest member of the extraction family that avoids 231;
// equals gamma(phi_inverse(p)) - 1. Throws NotAv132.
std::int64_t gamma_from_perm(const Permutation& p);

// Visit Av_n(132) once each (through the tree bijection).
void for_each_av132(int n, const std::function<void(const Permutation&)>& visit,
                    std::optional<int> cap = std::nullopt);

// Number of p in Av_n(132) whose r_tilde members of size > 1 all contain
// 231; matches [x^{n+1}] of the gamma<=2 ordered series. Counted by
// filtering, default cap n <= 12.
BigInt count_all_rtilde_contain_231(int n, std::optional<int> cap = std::nullopt);

}  // namespace caterpillar
