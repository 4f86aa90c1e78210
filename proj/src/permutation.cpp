#include "caterpillar/permutation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace caterpillar {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size(), false);
  for (int v : entries_) {
    if (v < 1 || v > static_cast<int>(entries_.size()) || seen[v - 1])
      throw Error(ErrorCode::InvalidInput,
                  "entries must cover 1.." + std::to_string(entries_.size()) +
                      " exactly once");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse_one_line(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> v;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      v.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "not an integer: '" + token + "'");
    }
  }
  if (v.empty()) throw Error(ErrorCode::InvalidInput, "empty permutation");
  return Permutation(std::move(v));
}

int Permutation::at(int i) const {
  if (i < 0 || i >= size())
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(i) + " outside 0.." + std::to_string(size() - 1));
  return entries_[i];
}

int Permutation::position_of(int value) const {
  if (value < 1 || value > size())
    throw Error(ErrorCode::IndexOutOfRange, "value " + std::to_string(value) + " not present");
  return static_cast<int>(std::find(entries_.begin(), entries_.end(), value) - entries_.begin());
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

// i < j < k with a[i] < a[k] < a[j]: right-to-left scan keeping a
// decreasing stack of '3' candidates; popped values are live '2's.
bool contains_132_values(const std::vector<int>& a) {
  int third = std::numeric_limits<int>::min();
  std::vector<int> stack;
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
    if (a[j] < third) return true;
    while (!stack.empty() && stack.back() < a[j]) {
      third = stack.back();
      stack.pop_back();
    }
    stack.push_back(a[j]);
  }
  return false;
}

bool contains_231_values(const std::vector<int>& a) {
  // reversing positions turns 231 into 132
  std::vector<int> rev(a.rbegin(), a.rend());
  return contains_132_values(rev);
}

bool backtrack_match(const std::vector<int>& p, const std::vector<int>& pat,
                     std::vector<int>& chosen, std::size_t from) {
  std::size_t need = pat.size() - chosen.size();
  if (need == 0) return true;
  for (std::size_t pos = from; pos + need <= p.size(); ++pos) {
    bool ok = true;
    for (std::size_t t = 0; t < chosen.size() && ok; ++t)
      ok = (pat[t] < pat[chosen.size()]) == (p[chosen[t]] < p[pos]);
    if (!ok) continue;
    chosen.push_back(static_cast<int>(pos));
    if (backtrack_match(p, pat, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() == 0) return true;
  if (pattern.size() > p.size()) return false;
  if (pattern.size() == 1) return p.size() >= 1;
  const std::vector<int>& a = p.entries();
  const std::vector<int>& s = pattern.entries();
  if (s == std::vector<int>{1, 3, 2}) return contains_132_values(a);
  if (s == std::vector<int>{2, 3, 1}) return contains_231_values(a);
  std::vector<int> chosen;
  return backtrack_match(a, s, chosen, 0);
}

std::optional<std::array<int, 3>> find_132(const Permutation& p) {
  const std::vector<int>& a = p.entries();
  int n = p.size();
  if (n < 3) return std::nullopt;
  // prefix minimum serves as the '1' for each candidate '3'
  std::vector<int> min_idx(n);
  min_idx[0] = 0;
  for (int j = 1; j < n; ++j)
    min_idx[j] = a[j] < a[min_idx[j - 1]] ? j : min_idx[j - 1];
  for (int j = 1; j + 1 < n; ++j) {
    int i = min_idx[j - 1];
    if (a[i] >= a[j]) continue;
    for (int k = j + 1; k < n; ++k)
      if (a[i] < a[k] && a[k] < a[j]) return std::array<int, 3>{i, j, k};
  }
  return std::nullopt;
}

Permutation r_tilde(const Permutation& p, int i) {
  int pivot = p.at(i);  // bounds-checked
  const std::vector<int>& a = p.entries();
  int lo = i, hi = i;
  while (lo > 0 && a[lo - 1] <= pivot) --lo;
  while (hi + 1 < p.size() && a[hi + 1] <= pivot) ++hi;
  std::vector<int> window(a.begin() + lo, a.begin() + hi + 1);
  std::vector<int> sorted = window;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : window)
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return Permutation(std::move(window));
}

ExtractionFamily extraction_family(const Permutation& p) {
  ExtractionFamily family{p, {}};
  family.members.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) family.members.push_back({i, r_tilde(p, i)});
  return family;
}

}  // namespace caterpillar
