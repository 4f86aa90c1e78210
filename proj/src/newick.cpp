#include "caterpillar/newick.hpp"

#include <cctype>
#include <variant>
#include <vector>

namespace caterpillar {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NewickDocument run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty input");

    // frames: children gathered per unmatched '('
    std::vector<std::vector<detail::NodePtr>> frames;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        frames.emplace_back();
        continue;
      }
      // a leaf: optional label
      detail::NodePtr node = detail::leaf_node();
      std::string label = read_label();
      saw_label_ |= !label.empty();
      names_.push_back(std::move(label));

      // close as many structures as the input provides
      while (true) {
        skip_branch_length();
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "expected ';'");
        char c = text_[pos_];
        if (c == ',') {
          if (frames.empty()) throw ParseError(pos_, "expected ';', not ','");
          if (frames.back().size() >= 1)
            throw ParseError(pos_, "expected ')' (nodes are strictly binary)");
          frames.back().push_back(std::move(node));
          ++pos_;
          break;  // read the next subtree
        }
        if (c == ')') {
          if (frames.empty()) throw ParseError(pos_, "unbalanced ')'");
          if (frames.back().empty())
            throw ParseError(pos_, "expected ',' (nodes are strictly binary)");
          ++pos_;
          detail::NodePtr left = std::move(frames.back()[0]);
          frames.pop_back();
          node = detail::internal_node(std::move(left), std::move(node));
          read_label();  // internal label, ignored
          continue;
        }
        if (c == ';') {
          if (!frames.empty()) throw ParseError(pos_, "unbalanced '(': expected ')'");
          ++pos_;
          skip_ws();
          if (pos_ < text_.size()) throw ParseError(pos_, "trailing characters after ';'");
          NewickDocument doc;
          doc.text = std::string(text_);
          doc.tree = OrderedTree::adopt(std::move(node));
          if (saw_label_) doc.leaf_names = std::move(names_);
          return doc;
        }
        throw ParseError(pos_, "expected ',', ')' or ';'");
      }
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_branch_length() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ':') return;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++digits;
      }
    }
    if (digits == 0) throw ParseError(start, "expected a number after ':'");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      std::size_t exp_digits = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++exp_digits;
      }
      if (exp_digits == 0) throw ParseError(pos_, "expected exponent digits");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  bool saw_label_ = false;
};

}  // namespace

NewickDocument parse_newick(std::string_view text) { return Parser(text).run(); }

std::string to_newick(const OrderedTree& tree,
                      const std::optional<std::vector<std::string>>& names) {
  std::size_t n = static_cast<std::size_t>(tree.n_leaves());
  std::vector<std::string> resolved;
  if (names) {
    if (names->size() != n)
      throw Error(ErrorCode::NameCountMismatch,
                  "got " + std::to_string(names->size()) + " names for " + std::to_string(n) +
                      " leaves");
    for (const std::string& name : *names)
      for (char c : name)
        if (!is_label_char(c))
          throw Error(ErrorCode::InvalidInput, "leaf name '" + name + "' has characters "
                                               "outside [A-Za-z0-9_]");
    resolved = *names;
  } else {
    resolved.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) resolved.push_back("x" + std::to_string(i));
  }

  std::string out;
  std::size_t next_name = 0;
  using Item = std::variant<const detail::TreeNode*, char>;
  std::vector<Item> stack{Item(tree.node().get())};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    if (std::holds_alternative<char>(item)) {
      out.push_back(std::get<char>(item));
      continue;
    }
    const detail::TreeNode* node = std::get<const detail::TreeNode*>(item);
    if (!node->left) {
      out += resolved[next_name++];
      continue;
    }
    stack.emplace_back(')');
    stack.emplace_back(node->right.get());
    stack.emplace_back(',');
    stack.emplace_back(node->left.get());
    out.push_back('(');
  }
  out.push_back(';');
  return out;
}

}  // namespace caterpillar
