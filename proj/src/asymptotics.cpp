#include "caterpillar/asymptotics.hpp"

#include <string>
#include <vector>

#include "caterpillar/coefficients.hpp"

namespace caterpillar {

namespace {

const Real& pi_value() {
  static const Real kPi = acos(Real(-1));
  return kPi;
}

void require_k_at_least(int k, int minimum) {
  if (k < minimum)
    throw Error(ErrorCode::InvalidInput,
                "k must be at least " + std::to_string(minimum) + ", got " + std::to_string(k));
}

Real pow_int(const Real& base, int exp) {
  return pow(base, exp);
}

// 1 - 4x + 2^{k+1} x^{k+1} and its derivative.
Real defining_poly(int k, const Real& x) {
  return 1 - 4 * x + ldexp(pow_int(x, k + 1), k + 1);
}

Real defining_poly_deriv(int k, const Real& x) {
  return -4 + ldexp(pow_int(x, k) * (k + 1), k + 1);
}

}  // namespace

const Real& unordered_growth_rho() {
  static const Real kRho("0.40269750367");
  return kRho;
}

const Real& unordered_growth_amplitude() {
  static const Real kAmp("0.3187766259");
  return kAmp;
}

Real rho_ordered(int k, int precision_digits) {
  require_k_at_least(k, 2);
  if (precision_digits < 1 || precision_digits > 45)
    throw Error(ErrorCode::InvalidInput, "precision must be in 1..45 decimal digits");
  // bootstrap bracket: poly > 0 at lo, < 0 at hi
  Real lo = Real(1) / 4 * (1 + ldexp(Real(1), -k - 1));
  Real hi = Real(1) / 4 * (1 + pow_int(Real(4) / 5, k + 1));
  for (int i = 0; i < 100; ++i) {
    Real mid = (lo + hi) / 2;
    (defining_poly(k, mid) > 0 ? lo : hi) = mid;
  }
  Real x = (lo + hi) / 2;
  for (int i = 0; i < 8; ++i) {
    Real step = defining_poly(k, x) / defining_poly_deriv(k, x);
    x -= step;
    if (x < lo || x > hi) x = (lo + hi) / 2;  // Newton escaped the bracket
  }
  Real tolerance = pow(Real(10), -precision_digits);
  if (abs(defining_poly(k, x)) > tolerance)
    throw Error(ErrorCode::NoConvergence,
                "root refinement for k=" + std::to_string(k) + " missed tolerance");
  return x;
}

AsymptoticModel ordered_model(int k) {
  Real rho = rho_ordered(k);
  Real b_rho = 4 * rho - ldexp(pow_int(rho, k + 1) * (k + 1), k + 1);
  AsymptoticModel model;
  model.family = TreeFamily::ordered;
  model.k = k;
  model.rho = rho;
  model.amplitude = sqrt(b_rho / pi_value()) / 4;
  return model;
}

Real asym_f_minus(int k, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  AsymptoticModel model = ordered_model(k);
  return model.amplitude * pow(Real(n), Real(-1.5)) * pow(1 / model.rho, static_cast<int>(n));
}

Real u_tilde_coefficient(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  // A = [x^n] sqrt(1-4x) ln(1-4x) = sum_{m=1}^{n} (-4^m / m) s_{n-m},
  // with s_0 = 1 and s_j = -2 catalan(j).
  BigRat a_exact = 0;
  BigInt pow4 = 1;
  for (int m = 1; m <= n; ++m) {
    pow4 *= 4;
    BigInt s = (m == n) ? BigInt(1) : BigInt(-2 * catalan(n - m));
    a_exact += BigRat(-pow4 * s, m);
  }
  Real sqrt2 = sqrt(Real(2));
  Real log_part = to_real(a_exact) / (2 * log(Real(2)));
  Real sqrt_part = (Real(1) / 4 - 1 / sqrt2) * to_real(BigInt(-2 * catalan(n)));
  return sqrt_part + log_part;
}

Real expected_gamma_approx(int n, ExpectationMode mode) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "approximation needs n >= 2");
  if (mode == ExpectationMode::log2) return log(Real(n)) / log(Real(2));
  return u_tilde_coefficient(n) / to_real(catalan(n));
}

AsymptoticModel rho_lambda_unordered(int k, int m) {
  require_k_at_least(k, 2);
  if (k >= m)
    throw Error(ErrorCode::KTooLargeForTruncation,
                "k=" + std::to_string(k) + " needs truncation order m > k (got m=" +
                    std::to_string(m) +
                    "): through order m the capped series equals the uncapped one, so "
                    "their singularities cannot be separated");
  std::vector<Real> w(m + 1);
  for (int i = 1; i <= m; ++i) w[i] = to_real(w_minus(k, i));

  auto phi_shifted = [&](const Real& x) {
    // x - x^{k+1} + (1/2) sum w_i x^{2i}, minus the target 1/2
    Real x2 = x * x;
    Real sum = 0;
    Real p = 1;
    for (int i = 1; i <= m; ++i) {
      p *= x2;
      sum += w[i] * p;
    }
    return x - pow_int(x, k + 1) + sum / 2 - Real(1) / 2;
  };

  // smallest positive solution on (0, 1/2]: grid scan for the first sign
  // change, then bisection
  const int kGrid = 1024;
  Real step = Real(1) / (2 * kGrid);
  Real lo = 0, hi = 0;
  bool found = false;
  for (int i = 1; i <= kGrid; ++i) {
    Real x = step * i;
    if (phi_shifted(x) >= 0) {
      lo = step * (i - 1);
      hi = x;
      found = true;
      break;
    }
  }
  if (!found)
    throw Error(ErrorCode::NoConvergence,
                "no root of the truncated singular equation on (0, 1/2]");
  for (int i = 0; i < 200; ++i) {
    Real mid = (lo + hi) / 2;
    (phi_shifted(mid) < 0 ? lo : hi) = mid;
  }
  Real rho = (lo + hi) / 2;

  // W_k'(rho^2) from the same truncation
  Real rho2 = rho * rho;
  Real deriv = 0;
  Real p = 1;  // rho^{2i-2}
  for (int i = 1; i <= m; ++i) {
    deriv += w[i] * p * i;
    p *= rho2;
  }
  Real lambda2 = 2 * rho - 2 * (k + 1) * pow_int(rho, k + 1) + 2 * rho2 * deriv;
  AsymptoticModel model;
  model.family = TreeFamily::unordered;
  model.k = k;
  model.truncation_m = m;
  model.rho = rho;
  model.amplitude = sqrt(lambda2) / (2 * sqrt(pi_value()));
  return model;
}

Real asym_w_minus(int k, std::int64_t n, int m) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  AsymptoticModel model = rho_lambda_unordered(k, m);
  return model.amplitude * pow(Real(n), Real(-1.5)) * pow(1 / model.rho, static_cast<int>(n));
}

Real prob_gamma_le_asym(std::int64_t n, int k, int m) {
  AsymptoticModel model = rho_lambda_unordered(k, m);
  return model.amplitude / unordered_growth_amplitude() *
         pow(unordered_growth_rho() / model.rho, static_cast<int>(n));
}

BigRat prob_gamma_le_exact(int n, int k) {
  return BigRat(w_minus(k, n), wedderburn(n));
}

}  // namespace caterpillar
