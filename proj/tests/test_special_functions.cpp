#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qgz/errors.hpp"
#include "qgz/oracle.hpp"
#include "qgz/special_functions.hpp"

using namespace qgz;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST_CASE("log_gamma known values") {
  CHECK(std::abs(log_gamma(2.0)) < 1e-13);
  CHECK(std::abs(log_gamma(1.0)) < 1e-13);
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(pi))) < 1e-13);
  // duplication formula: Gamma(z) Gamma(z+1/2) = 2^{1-2z} sqrt(pi) Gamma(2z)
  for (double z : {0.3, 1.7, 4.2}) {
    cplx lhs = log_gamma(z) + log_gamma(z + 0.5);
    cplx rhs = (1.0 - 2.0 * z) * std::log(2.0) + 0.5 * std::log(pi) +
               log_gamma(2.0 * z);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  CHECK_THROWS_AS(log_gamma(0.0), PoleAtNonpositiveInteger);
  CHECK_THROWS_AS(log_gamma(-3.0), PoleAtNonpositiveInteger);
}

TEST_CASE("riemann zeta known values") {
  CHECK(riemann_zeta(-1.0).value.real() ==
        doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
  CHECK(riemann_zeta(0.0).value.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(riemann_zeta(2.0).value.real() ==
        doctest::Approx(pi * pi / 6.0).epsilon(1e-13));
  CHECK(riemann_zeta(4.0).value.real() ==
        doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-13));
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleAtOne);
}

TEST_CASE("riemann zeta derivative at zero") {
  CHECK(riemann_zeta_deriv0() ==
        doctest::Approx(-0.5 * std::log(2.0 * pi)).epsilon(1e-15));
  CHECK(riemann_zeta_deriv0() == doctest::Approx(-0.91893853320467274).epsilon(1e-14));
  double fd = oracle::finite_difference_deriv(
      [](double x) { return riemann_zeta(x).value.real(); }, 0.0, 1e-5);
  CHECK(std::abs(fd - riemann_zeta_deriv0()) < 1e-6);
}

TEST_CASE("dirichlet eta") {
  CHECK(dirichlet_eta(1.0).value.real() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(dirichlet_eta(2.0).value.real() ==
        doctest::Approx(pi * pi / 12.0).epsilon(1e-13));
  CHECK(dirichlet_eta(0.0).value.real() == doctest::Approx(0.5).epsilon(1e-12));

  // eta relation at random complex points away from z = 1
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> re(-5.0, 5.0), im(-3.0, 3.0);
  int tested = 0;
  while (tested < 50) {
    cplx z(re(rng), im(rng));
    if (std::abs(z - 1.0) < 0.1) continue;
    ++tested;
    cplx eta = dirichlet_eta(z).value;
    cplx expect = (1.0 - std::exp((1.0 - z) * std::log(2.0))) *
                  riemann_zeta(z).value;
    CHECK(std::abs(eta - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("hurwitz zeta special points") {
  CHECK(hurwitz_zeta(2.0, 1.0).value.real() ==
        doctest::Approx(pi * pi / 6.0).epsilon(1e-13));
  // zeta_H(-1, 1/2) = -B_2(1/2)/2 = 1/24
  CHECK(hurwitz_zeta(-1.0, 0.5).value.real() ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  // zeta_H(0, a) = 1/2 - a
  CHECK(hurwitz_zeta(0.0, 0.3).value.real() ==
        doctest::Approx(0.2).epsilon(1e-12));

  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleAtOne);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 1.5), DomainError);
}

TEST_CASE("hurwitz zeta at negative integers vs Bernoulli polynomials") {
  for (int r = 0; r <= 8; ++r) {
    for (int ai = 1; ai <= 10; ++ai) {
      double a = 0.1 * ai;
      double expect = -bernoulli_polynomial(r + 1, a) / (r + 1);
      CHECK(hurwitz_zeta(-double(r), a).value.real() ==
            doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("hurwitz zeta error estimates are honest") {
  for (double z : {-3.0, -0.6, 0.4, 2.5, 6.0}) {
    for (double a : {0.1, 0.5, 0.9}) {
      EvalResult r = hurwitz_zeta(z, a);
      // direct sum oracle where the series converges
      if (z > 1.5) {
        double direct = 0.0;
        for (int n = 200000; n >= 0; --n) direct += std::pow(n + a, -z);
        CHECK(std::abs(r.value.real() - direct) <
              r.abs_error_estimate + 1e-8);
      }
      CHECK(r.abs_error_estimate < 1e-12 * std::max(1.0, std::abs(r.value)));
    }
  }
}

TEST_CASE("hurwitz pair identity against Fourier expansion") {
  for (double s : {-0.3, -1.0, -2.5}) {
    for (double a : {0.1, 0.25, 0.4}) {
      double lhs = hurwitz_zeta(2.0 * s, a).value.real() +
                   hurwitz_zeta(2.0 * s, 1.0 - a).value.real();
      double rhs = oracle::hurwitz_pair_fourier(s, a, 1e-10);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("hurwitz zeta derivative at zero (Lerch)") {
  CHECK(hurwitz_zeta_deriv0(1.0) ==
        doctest::Approx(riemann_zeta_deriv0()).epsilon(1e-15));
  CHECK(hurwitz_zeta_deriv0(0.5) ==
        doctest::Approx(-0.5 * std::log(2.0) - 0.5 * std::log(2.0 * pi) +
                        std::log(std::sqrt(2.0 * pi)))
            .epsilon(1e-13));
  // finite-difference cross-check in z
  for (double a : {0.25, 0.5, 0.77, 1.0}) {
    double fd = oracle::finite_difference_deriv(
        [a](double z) { return hurwitz_zeta(z, a).value.real(); }, 0.0, 1e-5);
    CHECK(std::abs(fd - hurwitz_zeta_deriv0(a)) < 1e-6);
  }
  CHECK_THROWS_AS(hurwitz_zeta_deriv0(0.0), DomainError);
}

TEST_CASE("bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
  CHECK(bernoulli_number(3) == 0.0);
  CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-15));

  CHECK(bernoulli_polynomial(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli_polynomial(2, 0.5) == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  // symmetry B_n(1-x) = (-1)^n B_n(x)
  for (int n : {3, 4, 7, 12}) {
    for (double x : {0.1, 0.3, 0.8}) {
      double lhs = bernoulli_polynomial(n, 1.0 - x);
      double rhs = (n % 2 ? -1.0 : 1.0) * bernoulli_polynomial(n, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  }
  CHECK_THROWS_AS(bernoulli_polynomial(61, 0.5), OrderTooLarge);
}

TEST_CASE("chebyshev polynomials") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(chebyshev_T(n, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(chebyshev_T(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(chebyshev_T(7, std::cos(0.3)) ==
        doctest::Approx(std::cos(2.1)).epsilon(1e-13));
  // T_n(cos y) = cos(n y) across the domain
  for (int n : {1, 5, 13, 40}) {
    for (double y = 0.0; y <= pi; y += 0.37) {
      CHECK(std::abs(chebyshev_T(n, std::cos(y)) - std::cos(n * y)) < 1e-10);
    }
  }
}

TEST_CASE("chebyshev coefficient expansion matches recurrence") {
  // T_n(x) = sum_r (-2)^r n/(n+r) C(n+r,2r) (1-x)^r, n <= 30; the
  // coefficients reach ~4^n with alternating signs, so accumulate in quad
  for (int n : {1, 2, 5, 12, 30}) {
    for (double x = -1.0; x <= 1.0; x += 0.25) {
      __float128 sum = 0, coef = 1;
      __float128 onemx = 1 - __float128(x), pw = 1;
      for (int r = 0; r <= n; ++r) {
        if (r > 0) {
          coef *= __float128(-2 * (n + r - 1) * (n - r + 1)) /
                  (2 * r * (2 * r - 1));
          pw *= onemx;
        }
        sum += coef * pw;
      }
      CHECK(std::abs(double(sum) - chebyshev_T(n, x)) < 1e-8);
    }
  }
}
