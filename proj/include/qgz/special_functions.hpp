#pragma once

#include <complex>

namespace qgz {

/// Numerical evaluation together with an upper bound on the truncation
/// error of the series / Euler-Maclaurin remainder used.
struct EvalResult {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
};

/// Principal-branch log Gamma (Lanczos approximation, reflection for
/// Re(z) < 0.5).
std::complex<double> log_gamma(std::complex<double> z);

/// Riemann zeta for z != 1.
EvalResult riemann_zeta(std::complex<double> z);

/// zeta_R'(0) = -ln(2 pi)/2.
double riemann_zeta_deriv0();

/// Dirichlet eta, entire; eta(1) = ln 2 at the removable point.
EvalResult dirichlet_eta(std::complex<double> z);

/// Hurwitz zeta for z != 1 and 0 < a <= 1, by Euler-Maclaurin summation.
EvalResult hurwitz_zeta(std::complex<double> z, double a);

/// d/dz zeta_H(z,a) at z = 0, via Lerch's formula log Gamma(a) - ln(2 pi)/2.
double hurwitz_zeta_deriv0(double a);

/// Bernoulli number B_n as a double (B_1 = -1/2 convention), n <= 62.
double bernoulli_number(int n);

/// Bernoulli polynomial B_n(x) from exact rational coefficients, n <= 60.
double bernoulli_polynomial(int n, double x);

/// Chebyshev polynomial of the first kind by three-term recurrence.
double chebyshev_T(int n, double x);

}  // namespace qgz
