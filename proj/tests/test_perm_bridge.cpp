#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "caterpillar/bijection.hpp"
#include "caterpillar/coefficients.hpp"
#include "caterpillar/enumerate.hpp"
#include "caterpillar/permutation.hpp"
#include "caterpillar/tree_stats.hpp"
#include "test_util.hpp"

using namespace caterpillar;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

// quadratic/cubic reference deciders, independent of the library scans
bool naive_contains(const std::vector<int>& p, const std::vector<int>& pat) {
  std::vector<int> idx(pat.size());
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t t, std::size_t from) {
    if (t == pat.size()) return true;
    for (std::size_t pos = from; pos < p.size(); ++pos) {
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s)
        ok = (pat[s] < pat[t]) == (p[idx[s]] < p[pos]);
      if (!ok) continue;
      idx[t] = static_cast<int>(pos);
      if (go(t + 1, pos + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

void for_each_sn(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

// pre-order-decreasing labels on internal nodes, per labelled subtree
void collect_labeled_subtrees(const OrderedTree& t, int& counter,
                              std::vector<std::pair<int, OrderedTree>>& out) {
  if (t.is_leaf()) return;
  int label = counter--;
  out.emplace_back(label, t);
  collect_labeled_subtrees(t.left(), counter, out);
  collect_labeled_subtrees(t.right(), counter, out);
}

}  // namespace

TEST_CASE("permutation type basics") {
  Permutation p = Permutation::parse_one_line("4 5 3 1 2 6 8 7");
  CHECK(p.size() == 8);
  CHECK(p.at(0) == 4);
  CHECK(p.at(7) == 7);
  CHECK(p.position_of(5) == 1);
  CHECK(p.to_one_line() == "4 5 3 1 2 6 8 7");
  CHECK_THROWS_AS(p.at(8), Error);
  CHECK_THROWS_AS(p.at(-1), Error);
  CHECK_THROWS_AS(perm({1, 1}), Error);
  CHECK_THROWS_AS(perm({0, 1}), Error);
  CHECK_THROWS_AS(perm({2, 3}), Error);
  CHECK_THROWS_AS(Permutation::parse_one_line("1 2 x"), Error);
  CHECK_THROWS_AS(Permutation::parse_one_line(""), Error);
}

TEST_CASE("contains_pattern on the reference permutation") {
  Permutation p = Permutation::parse_one_line("4 5 3 1 2 6 8 7");
  // 4, 8, 7 is a 132 occurrence, so this is NOT 132-avoiding
  CHECK(contains_pattern(p, perm({1, 3, 2})));
  CHECK(contains_pattern(p, perm({2, 3, 1})));
  CHECK(contains_pattern(perm({2, 3, 1}), perm({2, 3, 1})));
  CHECK_FALSE(contains_pattern(perm({1, 2, 3}), perm({1, 3, 2})));
  CHECK(contains_pattern(p, perm({1})));
  CHECK_FALSE(contains_pattern(perm({1, 2}), perm({1, 3, 2})));
}

TEST_CASE("Av_6(132) has catalan(7) members") {
  int count = 0;
  for_each_sn(6, [&](const std::vector<int>& v) {
    if (!contains_pattern(perm(v), perm({1, 3, 2}))) ++count;
  });
  CHECK(count == 132);
  CHECK(catalan(7) == 132);
}

TEST_CASE("fast deciders agree with backtracking on random permutations") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p = perm(v);
    CHECK(contains_pattern(p, perm({1, 3, 2})) == naive_contains(v, {1, 3, 2}));
    CHECK(contains_pattern(p, perm({2, 3, 1})) == naive_contains(v, {2, 3, 1}));
    CHECK(contains_pattern(p, perm({2, 1, 4, 3})) == naive_contains(v, {2, 1, 4, 3}));
  }
}

TEST_CASE("find_132 returns a valid witness exactly when 132 occurs") {
  std::mt19937_64 rng(78);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p = perm(v);
    auto w = find_132(p);
    CHECK(w.has_value() == contains_pattern(p, perm({1, 3, 2})));
    if (w) {
      auto [i, j, k] = *w;
      CHECK(i < j);
      CHECK(j < k);
      CHECK(v[i] < v[k]);
      CHECK(v[k] < v[j]);
    }
  }
}

TEST_CASE("phi base cases") {
  CHECK(phi(test_util::cherry()) == perm({1}));
  std::set<Permutation> images;
  for_each_ordered(3, [&](const OrderedTree& t) { images.insert(phi(t)); });
  CHECK(images == std::set<Permutation>{perm({1, 2}), perm({2, 1})});
  CHECK_THROWS_AS(phi(test_util::leaf()), Error);
}

TEST_CASE("phi is a bijection onto Av(132)") {
  for (int n = 1; n <= 8; ++n) {
    std::set<Permutation> images;
    long long count = 0;
    for_each_av132(n, [&](const Permutation& p) {
      ++count;
      CHECK(p.size() == n);
      CHECK_FALSE(contains_pattern(p, perm({1, 3, 2})));
      images.insert(p);
    });
    CHECK(count == catalan(n + 1));       // everything 132-avoiding is hit
    CHECK(BigInt(images.size()) == catalan(n + 1));  // injective
  }
}

TEST_CASE("phi image equals the filtered symmetric group") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> by_filter;
    for_each_sn(n, [&](const std::vector<int>& v) {
      if (!naive_contains(v, {1, 3, 2})) by_filter.insert(perm(v));
    });
    std::set<Permutation> by_trees;
    for_each_av132(n, [&](const Permutation& p) { by_trees.insert(p); });
    CHECK(by_filter == by_trees);
  }
}

TEST_CASE("phi_inverse round trips") {
  CHECK(phi_inverse(perm({1})) == test_util::cherry());
  for (int n = 1; n <= 7; ++n) {
    for_each_av132(n, [&](const Permutation& p) {
      OrderedTree t = phi_inverse(p);
      CHECK(phi(t) == p);
    });
  }
  for (int n = 2; n <= 8; ++n) {
    for_each_ordered(n, [&](const OrderedTree& t) { CHECK(phi_inverse(phi(t)) == t); });
  }
}

TEST_CASE("phi_inverse rejects 132-containing input with a witness") {
  CHECK_THROWS_AS(phi_inverse(Permutation::parse_one_line("4 5 3 1 2 6 8 7")), NotAv132Error);
  CHECK_THROWS_AS(phi_inverse(perm({1, 3, 2})), NotAv132Error);
  try {
    phi_inverse(perm({1, 3, 2}));
    FAIL("expected a throw");
  } catch (const NotAv132Error& e) {
    CHECK(e.pos1() == 0);
    CHECK(e.pos2() == 1);
    CHECK(e.pos3() == 2);
  }
}

TEST_CASE("r_tilde reproduces the worked example") {
  Permutation p = Permutation::parse_one_line("4 5 3 1 2 6 8 7");
  auto by_value = [&](int v) { return r_tilde(p, p.position_of(v)); };
  CHECK(by_value(4) == perm({1}));
  CHECK(by_value(5) == perm({4, 5, 3, 1, 2}));
  CHECK(by_value(3) == perm({3, 1, 2}));
  CHECK(by_value(1) == perm({1}));
  CHECK(by_value(2) == perm({1, 2}));
  CHECK(by_value(6) == perm({4, 5, 3, 1, 2, 6}));
  CHECK(by_value(8) == perm({4, 5, 3, 1, 2, 6, 8, 7}));
  CHECK(by_value(7) == perm({1}));
  CHECK_THROWS_AS(r_tilde(p, 8), Error);
  CHECK_THROWS_AS(r_tilde(p, -1), Error);
}

TEST_CASE("r_tilde singleton law: the pivot maps to the window maximum") {
  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p = perm(v);
    for (int i = 0; i < n; ++i) {
      Permutation ex = r_tilde(p, i);
      bool pivot_is_max = false;
      for (int j = 0; j < ex.size(); ++j)
        if (ex.at(j) == ex.size()) pivot_is_max = true;
      CHECK(pivot_is_max);  // the pivot is the unique window maximum
      CHECK(ex.size() >= 1);
    }
  }
}

TEST_CASE("extraction_family covers every position") {
  Permutation p = Permutation::parse_one_line("4 5 3 1 2 6 8 7");
  ExtractionFamily family = extraction_family(p);
  CHECK(family.members.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(family.members[i].index == i);
    CHECK(family.members[i].extracted == r_tilde(p, i));
  }
}

TEST_CASE("gamma_from_perm equals gamma - 1 through phi") {
  for (int nt = 2; nt <= 9; ++nt) {
    for_each_ordered(nt, [&](const OrderedTree& t) {
      CHECK(gamma_from_perm(phi(t)) == gamma(t) - 1);
    });
  }
  CHECK(gamma_from_perm(perm({1})) == 1);
  CHECK_THROWS_AS(gamma_from_perm(perm({1, 3, 2})), NotAv132Error);
}

TEST_CASE("caterpillar subtrees correspond to 231-avoiding extractions") {
  // node labelled m <-> entry with value m: the subtree is a caterpillar of
  // size s iff the extraction at that entry avoids 231 and has size s-1
  for (int nt = 2; nt <= 8; ++nt) {
    for_each_ordered(nt, [&](const OrderedTree& t) {
      Permutation p = phi(t);
      int counter = static_cast<int>(size(t)) - 1;
      std::vector<std::pair<int, OrderedTree>> labeled;
      collect_labeled_subtrees(t, counter, labeled);
      for (const auto& [label, subtree] : labeled) {
        Permutation ex = r_tilde(p, p.position_of(label));
        bool avoids = !contains_pattern(ex, perm({2, 3, 1}));
        CHECK(avoids == is_caterpillar(subtree));
        if (avoids) CHECK(ex.size() == size(subtree) - 1);
      }
    });
  }
}

TEST_CASE("count_all_rtilde_contain_231 matches the series and the listed terms") {
  const long long first_terms[] = {1, 0, 1, 2, 6, 16, 45, 126, 358, 1024};
  for (int n = 1; n <= 10; ++n) {
    BigInt c = count_all_rtilde_contain_231(n);
    CHECK(c == first_terms[n - 1]);
    CHECK(c == f_minus(2, n + 1));
  }
  CHECK_THROWS_AS(count_all_rtilde_contain_231(13), Error);
  CHECK(count_all_rtilde_contain_231(13, 13) == f_minus(2, 14));
}

TEST_CASE("valley/peak characterization of the all-contain-231 set") {
  auto is_valley = [](const std::vector<int>& v, int i) {
    if (i > 0 && v[i - 1] < v[i]) return false;
    if (i + 1 < static_cast<int>(v.size()) && v[i + 1] < v[i]) return false;
    return true;
  };
  auto has_peak = [](const Permutation& q) {
    for (int j = 1; j + 1 < q.size(); ++j)
      if (q.at(j - 1) < q.at(j) && q.at(j) > q.at(j + 1)) return true;
    return false;
  };
  for (int n = 1; n <= 8; ++n) {
    std::set<Permutation> all_contain, valley_peak;
    for_each_av132(n, [&](const Permutation& p) {
      bool ok231 = true;
      for (int i = 0; i < n && ok231; ++i) {
        Permutation ex = r_tilde(p, i);
        if (ex.size() > 1 && !contains_pattern(ex, perm({2, 3, 1}))) ok231 = false;
      }
      if (ok231) all_contain.insert(p);
      bool ok_vp = true;
      for (int i = 0; i < n && ok_vp; ++i)
        if (!is_valley(p.entries(), i) && !has_peak(r_tilde(p, i))) ok_vp = false;
      if (ok_vp) valley_peak.insert(p);
    });
    CHECK(all_contain == valley_peak);
  }
}

TEST_CASE("permutation serialization round trip") {
  std::mt19937_64 rng(80);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p = perm(v);
    CHECK(Permutation::parse_one_line(p.to_one_line()) == p);
  }
}
