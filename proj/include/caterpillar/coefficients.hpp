#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "caterpillar/numbers.hpp"
#include "caterpillar/tree.hpp"

namespace caterpillar {

// Number of ordered trees with n leaves: 1, 1, 2, 5, 14, 42, ...
BigInt catalan(int n);

// Ordered trees with n leaves and gamma <= k. Equals catalan(n) for n <= k;
// the generating function satisfies F = x + F^2 - 2^{k-1} x^{k+1}.
BigInt f_minus(int k, int n);

// Ordered trees with gamma >= k: catalan(n) - f_minus(k-1, n).
BigInt f_plus(int k, int n);

// Ordered trees with gamma exactly k: f_minus(k, n) - f_minus(k-1, n).
BigInt f_exact(int k, int n);

// Number of unordered trees with n leaves: 1, 1, 1, 2, 3, 6, 11, 23, ...
BigInt wedderburn(int n);

// Unordered trees with n leaves and gamma <= k. The half-square term of
// W = x + W^2/2 + W(x^2)/2 - x^{k+1} is handled with the odd/even split so
// every intermediate stays an integer.
BigInt w_minus(int k, int n);

// Exact E_n(gamma) = 1 + sum_{k=1}^{n-1} (catalan(n) - f_minus(k, n)) / catalan(n).
BigRat expected_gamma_exact(int n);

// Exhaustive histogram gamma -> count over the whole family at size n.
// Keys are zero-filled over the attainable range (2..n; just {1:1} at n=1).
std::map<int, std::uint64_t> gamma_histogram_oracle(int n, TreeFamily family,
                                                    std::optional<int> cap = std::nullopt);

namespace series {

// Same f_minus coefficient through the algebraic route: the series
// S = sqrt(1 - 4x + 2^{k+1} x^{k+1}) has integer coefficients s_0 = 1,
// s_n = -2 f_minus(k, n), and Q S' = Q' S / 2 gives the linear recurrence
//   (n+1) s_{n+1} = (4n - 2) s_n + 2^k (3k + 1 - 2n) s_{n-k}.
// O(n) big-integer steps per call, which keeps expected_gamma_exact
// tractable for n in the thousands.
BigInt f_minus_at(int k, int n);

}  // namespace series

}  // namespace caterpillar
