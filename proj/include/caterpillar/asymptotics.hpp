#pragma once

#include <cstdint>

#include "caterpillar/numbers.hpp"
#include "caterpillar/tree.hpp"

namespace caterpillar {

// Published constants of the unconstrained Wedderburn asymptotics
// w_n ~ amplitude * n^{-3/2} rho^{-n}.
const Real& unordered_growth_rho();        // 0.40269750367
const Real& unordered_growth_amplitude();  // 0.3187766259

// Growth model for counts ~ amplitude * n^{-3/2} * rho^{-n}.
struct AsymptoticModel {
  TreeFamily family;
  int k = 0;
  int truncation_m = 0;  // unordered only
  Real rho;
  Real amplitude;
};

// Smallest positive root of 1 - 4x + 2^{k+1} x^{k+1} = 0, bracketed inside
// (1/4 (1 + 2^{-k-1}), 1/4 (1 + (4/5)^{k+1})), bisected then polished with
// Newton. The result satisfies the polynomial to within 10^{-precision};
// NoConvergence otherwise.
Real rho_ordered(int k, int precision_digits = 30);

// Full model for the ordered family; amplitude is
// (1/4) sqrt((4 rho - (k+1) 2^{k+1} rho^{k+1}) / pi).
AsymptoticModel ordered_model(int k);

// Asymptotic estimate of f_minus(k, n).
Real asym_f_minus(int k, std::int64_t n);

// [x^n] of Utilde(x) = 1/2 + 1/(2 sqrt 2)
//                      + sqrt(1-4x) (-1/sqrt 2 + log2(sqrt(1-4x)) + 1/4).
// The sqrt(1-4x) series is 1 - 2 C(x) (integers); the log factor contributes
// rational coefficients times 1/ln 2, applied once at the end.
Real u_tilde_coefficient(int n);

enum class ExpectationMode { ratio, log2 };

// E_n(gamma) approximations: `ratio` = u_tilde_coefficient(n)/catalan(n),
// `log2` = the cruder log2(n) estimate.
Real expected_gamma_approx(int n, ExpectationMode mode = ExpectationMode::ratio);

// Singularity and amplitude of the gamma-capped unordered family, estimated
// from the first m exactly computed coefficients: rho solves
// x - x^{k+1} + (1/2) sum_{i<=m} w_{i,k} x^{2i} = 1/2 (smallest positive
// solution on (0, 1/2]), and amplitude is lambda_k / (2 sqrt(pi)) with
// lambda_k^2 = 2 rho - 2(k+1) rho^{k+1} + 2 rho^2 W_k'(rho^2).
// Throws KTooLargeForTruncation when k >= m: the truncated series of the
// capped and uncapped families then coincide, so the roots are
// indistinguishable and the method degenerates.
AsymptoticModel rho_lambda_unordered(int k, int m = 30);

// Asymptotic estimate of w_minus(k, n) at truncation order m.
Real asym_w_minus(int k, std::int64_t n, int m = 30);

// P(gamma <= k) for a uniform unordered tree of size n, asymptotically:
// (amp_k / amp) * (rho_k / rho)^{-n}.
Real prob_gamma_le_asym(std::int64_t n, int k, int m = 30);

// Exact mode: w_minus(k, n) / wedderburn(n); saturates to 1 for k >= n.
BigRat prob_gamma_le_exact(int n, int k);

}  // namespace caterpillar
