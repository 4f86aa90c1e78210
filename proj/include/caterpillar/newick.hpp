#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caterpillar/tree.hpp"

namespace caterpillar {

struct NewickDocument {
  std::string text;
  OrderedTree tree = OrderedTree::leaf();
  // Present iff at least one leaf carried a label; unlabeled leaves get "".
  std::optional<std::vector<std::string>> leaf_names;
};

// Strictly binary Newick: Tree := Subtree ";", Subtree := leaf-label |
// "(" Subtree "," Subtree ")" [label]; labels are [A-Za-z0-9_]*, branch
// lengths (":" number) are parsed and dropped, whitespace is free. Errors
// are ParseError with the byte offset and what was expected.
NewickDocument parse_newick(std::string_view text);

// Renders with the given leaf names (default x1..xn, left to right).
// Throws NameCountMismatch when the name count is not size(tree).
std::string to_newick(const OrderedTree& tree,
                      const std::optional<std::vector<std::string>>& names = std::nullopt);

}  // namespace caterpillar
