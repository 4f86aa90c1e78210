#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "caterpillar/enumerate.hpp"
#include "caterpillar/newick.hpp"
#include "caterpillar/tree_stats.hpp"
#include "test_util.hpp"

using namespace caterpillar;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    parse_newick(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected ParseError for: ", text);
  return 0;
}

}  // namespace

TEST_CASE("parse basic shapes") {
  NewickDocument cherry = parse_newick("(a,b);");
  CHECK(size(cherry.tree) == 2);
  REQUIRE(cherry.leaf_names.has_value());
  CHECK(*cherry.leaf_names == std::vector<std::string>{"a", "b"});

  NewickDocument balanced = parse_newick("((a,b),(c,d));");
  CHECK(size(balanced.tree) == 4);
  CHECK(gamma(balanced.tree) == 2);
  CHECK(balanced.tree == test_util::balanced(2));

  NewickDocument comb = parse_newick("((((a,b),c),d),e);");
  CHECK(size(comb.tree) == 5);
  CHECK(gamma(comb.tree) == 5);
  CHECK(colless_index(comb.tree) == 1);
  CHECK(comb.tree == test_util::left_comb(5));
}

TEST_CASE("labels are optional; branch lengths and whitespace are dropped") {
  NewickDocument bare = parse_newick("(,);");
  CHECK(size(bare.tree) == 2);
  CHECK_FALSE(bare.leaf_names.has_value());

  NewickDocument mixed = parse_newick(" ( a : 1.5 , ( b , c ) inner : 2e-3 ) root ;");
  CHECK(size(mixed.tree) == 3);
  REQUIRE(mixed.leaf_names.has_value());
  CHECK(*mixed.leaf_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(to_newick(mixed.tree, mixed.leaf_names) == "(a,(b,c));");

  NewickDocument single = parse_newick("only_leaf;");
  CHECK(size(single.tree) == 1);
  CHECK(*single.leaf_names == std::vector<std::string>{"only_leaf"});
  CHECK(parse_newick(";").tree.is_leaf());

  NewickDocument negative = parse_newick("(a:-1.5,b:+.5);");
  CHECK(size(negative.tree) == 2);
}

TEST_CASE("to_newick default names and name validation") {
  CHECK(to_newick(test_util::cherry()) == "(x1,x2);");
  CHECK(to_newick(test_util::left_comb(3)) == "((x1,x2),x3);");
  CHECK(to_newick(test_util::right_comb(3), std::vector<std::string>{"a", "b", "c"}) ==
        "(a,(b,c));");
  CHECK_THROWS_AS(to_newick(test_util::cherry(), std::vector<std::string>{"a"}), Error);
  try {
    to_newick(test_util::cherry(), std::vector<std::string>{"a"});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NameCountMismatch);
  }
  CHECK_THROWS_AS(to_newick(test_util::cherry(), std::vector<std::string>{"a", "b c"}), Error);
}

TEST_CASE("round trip over all trees of size 6") {
  for_each_ordered(6, [&](const OrderedTree& t) {
    CHECK(parse_newick(to_newick(t)).tree == t);
  });
}

TEST_CASE("round trip on random trees up to size 200") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 500; ++rep) {
    int n = 1 + static_cast<int>(rng() % 200);
    OrderedTree t = test_util::random_tree(n, rng);
    NewickDocument doc = parse_newick(to_newick(t));
    CHECK(doc.tree == t);
    CHECK(doc.leaf_names.has_value());  // default names round in
  }
}

TEST_CASE("serialize-parse canonically re-renders") {
  std::string noisy = "( a:1 ,\t( b:2.5 , c:3e2 ) x )  ;";
  NewickDocument doc = parse_newick(noisy);
  CHECK(to_newick(doc.tree, doc.leaf_names) == "(a,(b,c));");
}

TEST_CASE("error offsets and expected-token messages") {
  CHECK(offset_of("") == 0);
  CHECK(offset_of("   ") == 0);
  CHECK(offset_of("(a,b,c);") == 4);   // third child
  CHECK(offset_of("(a);") == 2);       // unary node
  CHECK(offset_of("((a,b);") == 6);    // unbalanced open
  CHECK(offset_of("(a,b));") == 5);    // unbalanced close
  CHECK(offset_of("(a,b)") == 5);      // missing semicolon
  CHECK(offset_of("(a,b); x") == 7);   // trailing garbage
  CHECK(offset_of("(a:x,b);") == 3);   // broken branch length
  CHECK(offset_of("a,b;") == 1);       // comma at top level
  try {
    parse_newick("(a,b,c);");
    FAIL("expected a throw");
  } catch (const ParseError& e) {
    CHECK(e.expected().find("binary") != std::string::npos);
  }
}

TEST_CASE("deleting any single parenthesis breaks a valid string") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 2 + static_cast<int>(rng() % 30);
    std::string good = to_newick(test_util::random_tree(n, rng));
    for (std::size_t i = 0; i < good.size(); ++i) {
      if (good[i] != '(' && good[i] != ')') continue;
      std::string broken = good.substr(0, i) + good.substr(i + 1);
      CHECK_THROWS_AS(parse_newick(broken), ParseError);
    }
  }
}

TEST_CASE("random corruption never crashes the parser") {
  std::mt19937_64 rng(44);
  const std::string alphabet = "(),;:ab_19. \t";
  for (int rep = 0; rep < 3000; ++rep) {
    int n = 2 + static_cast<int>(rng() % 12);
    std::string s = to_newick(test_util::random_tree(n, rng));
    int edits = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = rng() % s.size();
      switch (rng() % 3) {
        case 0: s[pos] = alphabet[rng() % alphabet.size()]; break;
        case 1: s.erase(pos, 1); break;
        default: s.insert(pos, 1, alphabet[rng() % alphabet.size()]);
      }
      if (s.empty()) s = "x";
    }
    try {
      NewickDocument doc = parse_newick(s);
      CHECK(size(doc.tree) >= 1);  // parsed: must be a well-formed tree
    } catch (const ParseError&) {
      // rejected cleanly
    }
  }
}

TEST_CASE("deep comb strings parse without stack overflow") {
  const int n = 100000;
  std::string deep;
  for (int i = 0; i < n - 1; ++i) deep.push_back('(');
  deep += "a";
  for (int i = 0; i < n - 1; ++i) deep += ",b)";
  deep += ";";
  NewickDocument doc = parse_newick(deep);
  CHECK(size(doc.tree) == n);
  CHECK(gamma(doc.tree) == n);
  CHECK(to_newick(doc.tree).size() > static_cast<std::size_t>(n));
}
