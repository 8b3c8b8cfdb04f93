#include "qgz/quantum_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qgz/errors.hpp"
#include "qgz/series_kernels.hpp"
#include "qgz/special_functions.hpp"

namespace qgz {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

cplx rpow(double x, cplx z) { return std::exp(z * std::log(x)); }

// cos-series prefactor 2 L^{2s} Gamma(1-2s) sin(s pi) / pi
cplx series_prefactor(double L, cplx s) {
  return 2.0 * rpow(L, 2.0 * s) * std::exp(log_gamma(1.0 - 2.0 * s)) *
         std::sin(s * kPi) / kPi;
}

}  // namespace

std::pair<int, int> dirichlet_multiplicities(const Graph& g,
                                             const DiscreteSpectrum& spec) {
  const int beta = g.betti_number();
  return {(beta - 1) + 2 * spec.kernel_dim_0,
          (beta - 1) + 2 * spec.kernel_dim_2};
}

TransferredSpectrum spectrum_transfer(const Graph& g,
                                      const DiscreteSpectrum& spec, double L) {
  if (L <= 0.0) {
    throw DomainError("edge length must be positive");
  }
  TransferredSpectrum ts;
  ts.edge_length = L;
  ts.betti = g.betti_number();
  ts.edge_count = g.edge_count();
  ts.vertex_count = g.vertex_count();
  ts.k_values.reserve(spec.eigenvalues.size());
  ts.phases.reserve(spec.eigenvalues.size());
  for (double lam : spec.eigenvalues) {
    double c = std::clamp(1.0 - lam, -1.0, 1.0);
    double k = std::acos(c) / L;
    ts.k_values.push_back(k);
    ts.phases.push_back(k * L / (2.0 * kPi));
  }
  auto [me, mo] = dirichlet_multiplicities(g, spec);
  ts.mult_even = me;
  ts.mult_odd = mo;
  return ts;
}

TransferredSpectrum transfer(const Graph& g, double L, double zero_tolerance) {
  return spectrum_transfer(g, eigenvalues(g, zero_tolerance), L);
}

ZetaValue quantum_zeta(const TransferredSpectrum& ts, std::complex<double> s) {
  if (std::abs(s - 0.5) < 1e-12) {
    throw PoleAtHalf("quantum zeta has a pole at s = 1/2");
  }
  const double L = ts.edge_length;
  const cplx l2pi = rpow(L / (2.0 * kPi), 2.0 * s);

  EvalResult zr = riemann_zeta(2.0 * s);
  cplx value =
      (rpow(4.0, s) * double(ts.betti - 1) + 2.0) * l2pi * zr.value;
  double err = std::abs(l2pi) * (std::abs(double(ts.betti - 1)) + 2.0) *
               zr.abs_error_estimate;

  for (size_t j = 1; j < ts.phases.size(); ++j) {
    double a = ts.phases[j];
    EvalResult h1 = hurwitz_zeta(2.0 * s, a);
    EvalResult h2 = hurwitz_zeta(2.0 * s, 1.0 - a);
    value += l2pi * (h1.value + h2.value);
    err += std::abs(l2pi) * (h1.abs_error_estimate + h2.abs_error_estimate);
  }
  return {value, err, Method::hurwitz};
}

double discrete_cosine_sum(const TransferredSpectrum& ts, int n) {
  double sum = 0.0;
  const double L = ts.edge_length;
  for (size_t j = 1; j < ts.k_values.size(); ++j) {
    sum += std::cos(ts.k_values[j] * L * double(n));
  }
  return sum;
}

double discrete_cosine_sum_coefficient_form(const TransferredSpectrum& ts,
                                            int n) {
  if (n < 0 || n > 30) {
    throw DomainError(
        "coefficient form is restricted to n <= 30 (binomial cancellation)");
  }
  const int nonzero = ts.vertex_count - 1;
  if (n == 0) return nonzero;

  using f128 = __float128;
  std::vector<f128> lam(nonzero), lampow(nonzero, f128(1));
  for (int j = 0; j < nonzero; ++j) {
    lam[j] =
        f128(1.0) - f128(std::cos(ts.k_values[j + 1] * ts.edge_length));
  }

  // coef_r = (-2)^r n/(n+r) C(n+r,2r); ratio recurrence from coef_{r-1}
  f128 coef = 1;
  f128 total = 0;
  for (int r = 0; r <= n; ++r) {
    if (r > 0) {
      coef *= f128(-2) * f128(n + r - 1) * f128(n - r + 1) /
              (f128(2 * r) * f128(2 * r - 1));
      for (int j = 0; j < nonzero; ++j) lampow[j] *= lam[j];
    }
    f128 zr = 0;  // Z(-r)
    for (int j = 0; j < nonzero; ++j) zr += lampow[j];
    total += coef * zr;
  }
  return static_cast<double>(total);
}

ZetaValue quantum_zeta_series(const TransferredSpectrum& ts,
                              std::complex<double> s, double tail_tol) {
  if (s.real() >= 0.0) {
    throw DomainError("series representation requires Re(s) < 0");
  }
  if (tail_tol <= 0.0) {
    throw DomainError("tail_tol must be positive");
  }

  const double L = ts.edge_length;
  const double sigma = s.real();
  const bool real_s = (s.imag() == 0.0);
  const int nterms = ts.vertex_count - 1;
  const cplx pref = series_prefactor(L, s);
  const double pref_abs = std::abs(pref);

  // Lemma-6 cross-check: the literal Z(-r) coefficient form must agree
  // with the cosine sum it replaces.
  for (int n = 1; n <= 30; ++n) {
    double direct = discrete_cosine_sum(ts, n);
    double coeff = discrete_cosine_sum_coefficient_form(ts, n);
    if (std::abs(direct - coeff) > 1e-8) {
      throw InternalCheckFailure(
          "Chebyshev coefficient form disagrees with cosine sum at n = " +
          std::to_string(n));
    }
  }

  // Dirichlet-test tail bound per phase: partial sums of cos(theta n)
  // are bounded by 1/|sin(theta/2)|, and n^{2s-1} has total variation
  // <= |2s-1| N^{2sigma-1}/(1-2sigma) beyond N.
  const double var_fac = 1.0 + std::abs(2.0 * s - 1.0) / (1.0 - 2.0 * sigma);
  const double per_term_tol = tail_tol / (pref_abs * std::max(1, nterms));

  cplx inner = 0.0;
  double tail_err = 0.0;
  for (size_t j = 1; j < ts.k_values.size(); ++j) {
    const double theta = ts.k_values[j] * L;
    const double bj = 1.0 / std::abs(std::sin(theta / 2.0));
    // solve bj * var_fac * N^{2sigma-1} <= per_term_tol
    double nreq =
        std::pow(bj * var_fac / per_term_tol, 1.0 / (1.0 - 2.0 * sigma));
    auto N = static_cast<std::int64_t>(std::ceil(nreq)) + 1;
    if (N > 200'000'000) {
      throw NoConvergence("series tail bound not reachable within cap");
    }
    if (real_s) {
      inner += kernels::cos_power_sum(theta, 2.0 * sigma - 1.0, 1, N);
    } else {
      inner += kernels::cos_power_sum(theta, 2.0 * s - 1.0, 1, N);
    }
    tail_err += pref_abs * bj * var_fac * std::pow(double(N), 2.0 * sigma - 1.0);
  }

  EvalResult zr = riemann_zeta(2.0 * s);
  const cplx l2pi = rpow(L / (2.0 * kPi), 2.0 * s);
  cplx value = pref * inner +
               (rpow(4.0, s) * double(ts.betti - 1) + 2.0) * l2pi * zr.value;
  double err = tail_err + std::abs(l2pi) *
                              (std::abs(double(ts.betti - 1)) + 2.0) *
                              zr.abs_error_estimate;
  return {value, err, Method::series};
}

double vacuum_energy(const TransferredSpectrum& ts) {
  // E_c = Z(-1/2)/2 with the Hurwitz pairs at s = -1/2 collapsed to
  // zeta_H(-1,a) + zeta_H(-1,1-a) = -B_2(a); the Riemann term uses
  // zeta_R(-1) = -1/12.
  double sum_b2 = 0.0;
  for (size_t j = 1; j < ts.phases.size(); ++j) {
    sum_b2 += bernoulli_polynomial(2, ts.phases[j]);
  }
  const double beta = ts.betti;
  return kPi / ts.edge_length *
         (-((beta - 1.0) / 2.0 + 2.0) / 12.0 - sum_b2);
}

double casimir_force(const TransferredSpectrum& ts) {
  return vacuum_energy(ts) / ts.edge_length;
}

double log_spectral_determinant(const TransferredSpectrum& ts) {
  // -Z'(0): the Riemann term contributes -ln2 (beta-1) - (beta+1) ln L,
  // the Hurwitz pairs vanish at s = 0 and differentiate via Lerch.
  const double beta = ts.betti;
  double logdet =
      std::log(2.0) * (beta - 1.0) + (beta + 1.0) * std::log(ts.edge_length);
  for (size_t j = 1; j < ts.phases.size(); ++j) {
    double a = ts.phases[j];
    if (a <= 0.0) {
      throw DegenerateDeterminant("zero eigenvalue branch k_j = 0 for j >= 2");
    }
    logdet -= 2.0 * (hurwitz_zeta_deriv0(a) + hurwitz_zeta_deriv0(1.0 - a));
  }
  return logdet;
}

double spectral_determinant(const TransferredSpectrum& ts) {
  return std::exp(log_spectral_determinant(ts));
}

SpectralInvariants spectral_invariants(const TransferredSpectrum& ts) {
  SpectralInvariants inv;
  inv.vacuum_energy = vacuum_energy(ts);
  inv.casimir_force = casimir_force(ts);
  inv.log_spectral_determinant = log_spectral_determinant(ts);
  return inv;
}

ZetaValue complete_bipartite_zeta_closed(int m, int p, double L,
                                         std::complex<double> s) {
  if (m < 1 || p < 1) {
    throw DomainError("complete bipartite parts must be >= 1");
  }
  if (L <= 0.0) {
    throw DomainError("edge length must be positive");
  }
  if (s.real() >= 0.0) {
    throw DomainError("closed form is used for Re(s) < 0");
  }
  EvalResult eta = dirichlet_eta(1.0 - 2.0 * s);
  EvalResult zr = riemann_zeta(2.0 * s);
  cplx gamma_term = rpow(L, 2.0 * s) *
                    std::exp(log_gamma(1.0 - 2.0 * s)) * std::sin(s * kPi) /
                    kPi;
  cplx term1 =
      -gamma_term * (double(m + p - 2) * rpow(4.0, s) + 2.0) * eta.value;
  cplx term2 = (rpow(4.0, s) * double(m * p - m - p) + 2.0) *
               rpow(L / (2.0 * kPi), 2.0 * s) * zr.value;
  double err = std::abs(gamma_term) * (m + p) * eta.abs_error_estimate +
               std::abs(rpow(L / (2.0 * kPi), 2.0 * s)) *
                   (std::abs(double(m * p - m - p)) + 2.0) *
                   zr.abs_error_estimate;
  return {term1 + term2, err, Method::closed_form};
}

}  // namespace qgz
