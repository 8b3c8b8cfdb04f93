#include "qgz/special_functions.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <mutex>
#include <numbers>
#include <quadmath.h>
#include <vector>

#include "qgz/errors.hpp"

namespace qgz {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

constexpr int kMaxBernoulli = 62;

// Exact Bernoulli numbers B_0..B_62 via sum_{k<m} C(m+1,k) B_k = -(m+1) B_m.
const std::vector<cpp_rational>& bernoulli_rationals() {
  static const std::vector<cpp_rational> table = [] {
    std::vector<cpp_rational> b(kMaxBernoulli + 1);
    b[0] = 1;
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      cpp_rational acc = 0;
      cpp_int binom = 1;  // C(m+1, k), k = 0
      for (int k = 0; k < m; ++k) {
        acc += binom * b[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[m] = -acc / (m + 1);
    }
    return b;
  }();
  return table;
}

// principal-branch exp(-z ln x) for x > 0
cplx rpow(double x, cplx z) { return std::exp(z * std::log(x)); }

bool near_real_integer(cplx z, double tol = 1e-13) {
  return std::abs(z.imag()) < tol &&
         std::abs(z.real() - std::round(z.real())) < tol;
}

// exp(w) - 1, accurate near w = 0
cplx expm1c(cplx w) {
  if (std::abs(w) < 1e-4) {
    return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0)));
  }
  return std::exp(w) - 1.0;
}

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n > kMaxBernoulli) {
    throw OrderTooLarge("Bernoulli number index out of range: " +
                        std::to_string(n));
  }
  return static_cast<double>(bernoulli_rationals()[n]);
}

double bernoulli_polynomial(int n, double x) {
  if (n < 0 || n > 60) {
    throw OrderTooLarge("Bernoulli polynomial order out of range: " +
                        std::to_string(n));
  }
  const auto& b = bernoulli_rationals();
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k; coefficients exact, Horner in x
  long double acc = 0.0L;
  cpp_int binom = 1;  // C(n,k) built alongside, k descending via symmetry
  // iterate k = n down to 0 so Horner accumulates in x
  std::vector<long double> coeff(n + 1);
  for (int k = 0; k <= n; ++k) {
    coeff[k] = static_cast<long double>(
        static_cast<double>(cpp_rational(binom) * b[n - k]));
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = n; k >= 0; --k) acc = acc * x + coeff[k];
  return static_cast<double>(acc);
}

double chebyshev_T(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 2; k <= n; ++k) {
    double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> log_gamma(std::complex<double> z) {
  // Lanczos, g = 7, 9 terms
  static const double g = 7.0;
  static const double coeff[9] = {
      0.99999999999980993,      676.5203681218851,   -1259.1392167224028,
      771.32342877765313,       -176.61502916214059, 12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

  if (near_real_integer(z) && z.real() < 0.5) {
    throw PoleAtNonpositiveInteger("log_gamma pole at z = " +
                                   std::to_string(z.real()));
  }
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // reflection: ln Gamma(z) = ln(pi / sin(pi z)) - ln Gamma(1 - z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  cplx zz = z - 1.0;
  cplx x = coeff[0];
  for (int i = 1; i < 9; ++i) x += coeff[i] / (zz + double(i));
  cplx t = zz + g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

namespace {

// Real-argument Euler-Maclaurin evaluation in quad precision.  For z < 0 the
// head terms grow like N^{|z|} while the result stays O(1); the cancellation
// eats ~(|z|+1) log10 N digits, which double cannot spare at z = -8.
EvalResult hurwitz_zeta_real(double zd, double a, int N, int M) {
  using f128 = __float128;
  const f128 z = zd;
  auto rp = [](f128 x, f128 p) { return expq(p * logq(x)); };
  // quad-exact B_n: the double rounding of e.g. 1/6 is already 1e-17
  // relative, which a ~1e9 correction term turns into 1e-8 absolute
  auto bern = [](int n) {
    const cpp_rational& r = bernoulli_rationals()[n];
    return f128(static_cast<double>(numerator(r))) /
           f128(static_cast<double>(denominator(r)));
  };

  f128 sum = 0;
  for (int k = N - 1; k >= 0; --k) sum += rp(f128(k) + f128(a), -z);

  const f128 na = f128(N) + f128(a);
  sum += rp(na, 1 - z) / (z - 1);
  sum += f128(0.5) * rp(na, -z);

  f128 poch = z;
  f128 napow = rp(na, -z - 1);
  f128 fact = 2;
  for (int m = 1; m <= M; ++m) {
    sum += bern(2 * m) / fact * poch * napow;
    poch *= (z + (2 * m - 1)) * (z + 2 * m);
    napow /= na * na;
    fact *= (2 * m + 1) * (2 * m + 2);
  }
  double value = static_cast<double>(sum);
  double err = static_cast<double>(
      fabsq(bern(2 * (M + 1)) / fact * poch * napow));
  return {cplx(value, 0.0), err + 4e-16 * std::abs(value)};
}

}  // namespace

EvalResult hurwitz_zeta(std::complex<double> z, double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta requires 0 < a <= 1, got a = " +
                      std::to_string(a));
  }
  if (std::abs(z - 1.0) < 1e-12) {
    throw PoleAtOne("hurwitz_zeta pole at z = 1");
  }

  // Euler-Maclaurin: head of N terms, integral + midpoint correction,
  // M correction terms with B_{2m}.
  const int N = std::max(10, static_cast<int>(std::ceil(std::abs(z))) + 10);
  const int M = 10;

  if (z.imag() == 0.0) {
    return hurwitz_zeta_real(z.real(), a, N, M);
  }

  cplx sum = 0.0;
  for (int k = 0; k < N; ++k) sum += rpow(k + a, -z);

  const double na = N + a;
  sum += rpow(na, 1.0 - z) / (z - 1.0);
  sum += 0.5 * rpow(na, -z);

  // term_m = B_{2m}/(2m)! * z (z+1) ... (z+2m-2) * (N+a)^{-z-2m+1}
  cplx poch = z;
  cplx napow = rpow(na, -z - 1.0);
  double fact = 2.0;  // (2m)!
  cplx term = 0.0;
  for (int m = 1; m <= M; ++m) {
    term = bernoulli_number(2 * m) / fact * poch * napow;
    sum += term;
    poch *= (z + double(2 * m - 1)) * (z + double(2 * m));
    napow /= na * na;
    fact *= (2 * m + 1) * (2 * m + 2);
  }
  // first omitted correction term bounds the remainder
  double err = std::abs(bernoulli_number(2 * (M + 1)) / fact * poch * napow);
  return {sum, err};
}

EvalResult riemann_zeta(std::complex<double> z) {
  if (std::abs(z - 1.0) < 1e-12) {
    throw PoleAtOne("riemann_zeta pole at z = 1");
  }
  return hurwitz_zeta(z, 1.0);
}

double riemann_zeta_deriv0() { return -0.5 * std::log(2.0 * std::numbers::pi); }

EvalResult dirichlet_eta(std::complex<double> z) {
  if (std::abs(z - 1.0) < 1e-13) {
    return {std::log(2.0), 1e-15};
  }
  // eta(z) = (1 - 2^{1-z}) zeta_R(z); factor via expm1 to stay accurate
  // when z is close to 1
  cplx factor = -expm1c((1.0 - z) * std::log(2.0));
  EvalResult zr = riemann_zeta(z);
  return {factor * zr.value, std::abs(factor) * zr.abs_error_estimate};
}

double hurwitz_zeta_deriv0(double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta_deriv0 requires 0 < a <= 1");
  }
  return std::lgamma(a) - 0.5 * std::log(2.0 * std::numbers::pi);
}

}  // namespace qgz
