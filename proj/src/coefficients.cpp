#include "caterpillar/coefficients.hpp"

#include <cassert>
#include <mutex>
#include <string>
#include <vector>

#include "caterpillar/enumerate.hpp"
#include "caterpillar/tree_stats.hpp"

namespace caterpillar {

namespace {

std::mutex g_tables_mutex;

void require_positive(int n, const char* what) {
  if (n < 1)
    throw Error(ErrorCode::InvalidInput,
                std::string(what) + " must be positive, got " + std::to_string(n));
}

// catalan(n) = c(n-1)-th Catalan number; grown with the hypergeometric step
// c(n) = c(n-1) * 2(2n-3) / n, exact at every step.
std::vector<BigInt>& catalan_table() {
  static std::vector<BigInt> table{0, 1};  // 1-indexed
  return table;
}

const BigInt& catalan_locked(int n) {
  auto& table = catalan_table();
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    BigInt next = table[m - 1] * (2 * (2 * m - 3));
    assert(next % m == 0);
    table.push_back(next / m);
  }
  return table[n];
}

// Convolution with the symmetric half: sum_{i=1}^{m-1} a_i a_{m-i}.
BigInt square_convolution(const std::vector<BigInt>& a, int m) {
  BigInt sum = 0;
  for (int i = 1; 2 * i < m; ++i) sum += a[i] * a[m - i];
  sum *= 2;
  if (m % 2 == 0) sum += a[m / 2] * a[m / 2];
  return sum;
}

// f_minus rows by the tree recurrence: f_m = [m=1] + conv - 2^{k-1}[m=k+1].
const BigInt& f_minus_locked(int k, int n) {
  static std::map<int, std::vector<BigInt>> tables;
  auto& row = tables[k];
  if (row.empty()) row = {0, 1};
  while (static_cast<int>(row.size()) <= n) {
    int m = static_cast<int>(row.size());
    BigInt value = square_convolution(row, m);
    if (m == k + 1) value -= BigInt(1) << (k - 1);
    row.push_back(std::move(value));
  }
  return row[n];
}

// Wedderburn-style rows; k < 0 means the unconstrained family.
const BigInt& w_row_locked(int k, int n) {
  static std::map<int, std::vector<BigInt>> tables;
  auto& row = tables[k];
  if (row.empty()) row = {0, 1};
  while (static_cast<int>(row.size()) <= n) {
    int m = static_cast<int>(row.size());
    BigInt value = 0;
    for (int i = 1; 2 * i < m; ++i) value += row[i] * row[m - i];
    if (m % 2 == 0) {
      const BigInt& h = row[m / 2];
      value += h * (h + 1) / 2;
    }
    if (k >= 0 && m == k + 1) value -= 1;
    row.push_back(std::move(value));
  }
  return row[n];
}

BigInt f_minus_or_zero(int k, int n) {
  if (k == 0) return 0;
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return f_minus_locked(k, n);
}

}  // namespace

BigInt catalan(int n) {
  require_positive(n, "n");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return catalan_locked(n);
}

BigInt f_minus(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return f_minus_locked(k, n);
}

BigInt f_plus(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  return catalan(n) - f_minus_or_zero(k - 1, n);
}

BigInt f_exact(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  return f_minus(k, n) - f_minus_or_zero(k - 1, n);
}

BigInt wedderburn(int n) {
  require_positive(n, "n");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return w_row_locked(-1, n);
}

BigInt w_minus(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  return w_row_locked(k, n);
}

namespace series {

BigInt f_minus_at(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  std::vector<BigInt> s(n + 1);
  s[0] = 1;
  const BigInt pow2k = BigInt(1) << k;
  for (int j = 0; j < n; ++j) {
    BigInt num = s[j] * (4 * j - 2);
    if (j >= k) num += pow2k * (3 * k + 1 - 2 * j) * s[j - k];
    assert(num % (j + 1) == 0);
    s[j + 1] = num / (j + 1);
  }
  assert(s[n] % 2 == 0);
  return -s[n] / 2;
}

}  // namespace series

BigRat expected_gamma_exact(int n) {
  require_positive(n, "n");
  if (n == 1) return 1;
  BigInt cat = catalan(n);
  BigInt missing = 0;  // sum over k of (catalan(n) - f_minus(k, n))
  for (int k = 1; k < n; ++k) missing += cat - series::f_minus_at(k, n);
  return 1 + BigRat(missing, cat);
}

std::map<int, std::uint64_t> gamma_histogram_oracle(int n, TreeFamily family,
                                                    std::optional<int> cap) {
  require_positive(n, "n");
  std::map<int, std::uint64_t> hist;
  if (n == 1) {
    hist[1] = 1;
    return hist;
  }
  for (int k = 2; k <= n; ++k) hist[k] = 0;
  if (family == TreeFamily::ordered) {
    for_each_ordered(n, [&](const OrderedTree& t) { ++hist[static_cast<int>(gamma(t))]; }, cap);
  } else {
    for_each_unordered(n, [&](const UnorderedTree& t) { ++hist[static_cast<int>(gamma(t))]; }, cap);
  }
  return hist;
}

}  // namespace caterpillar
