#pragma once

#include <cstdint>

#include "caterpillar/numbers.hpp"
#include "caterpillar/tree.hpp"

namespace caterpillar {

// True iff every internal node has at least one leaf child; a lone leaf and
// the cherry qualify.
bool is_caterpillar(const OrderedTree& tree);
bool is_caterpillar(const UnorderedTree& tree);

// Size of the biggest rooted subtree that is a caterpillar; 1 for a leaf,
// >= 2 for any larger tree.
std::int64_t gamma(const OrderedTree& tree);
std::int64_t gamma(const UnorderedTree& tree);

// Normalized imbalance: sum over nodes of |size(left) - size(right)|,
// divided by its maximum (n-1)(n-2)/2. An exact rational in [0, 1]; equals
// 1 exactly for caterpillars, 0 for completely balanced trees. Throws
// SizeTooSmall for n <= 2 where the normalization is undefined.
BigRat colless_index(const OrderedTree& tree);
BigRat colless_index(const UnorderedTree& tree);

}  // namespace caterpillar
