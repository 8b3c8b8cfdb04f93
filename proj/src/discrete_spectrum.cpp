#include "qgz/discrete_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "qgz/errors.hpp"

namespace qgz {

std::vector<double> normalized_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> delta(static_cast<size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) {
    delta[static_cast<size_t>(v) * n + v] = 1.0;
  }
  for (const auto& [u, v] : g.edges()) {
    // row u couples to every neighbor with -1/d_u, matching
    // (Delta f)(u) = f(u) - (1/d_u) sum_{v ~ u} f(v)
    delta[static_cast<size_t>(u) * n + v] = -1.0 / g.degree(u);
    delta[static_cast<size_t>(v) * n + u] = -1.0 / g.degree(v);
  }
  return delta;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<size_t>(i) * n + j];
  };

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(at(p, q));
    if (off < 1e-15 * n * n) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = at(i, p), aiq = at(i, q);
          at(i, p) = aip - s * (aiq + tau * aip);
          at(p, i) = at(i, p);
          at(i, q) = aiq + s * (aip - tau * aiq);
          at(q, i) = at(i, q);
        }
      }
    }
  }
  throw EigensolverFailure("Jacobi iteration did not converge in 100 sweeps");
}

DiscreteSpectrum eigenvalues(const Graph& g, double zero_tolerance) {
  if (zero_tolerance <= 0.0 || zero_tolerance > 1e-6) {
    throw DomainError("zero_tolerance must lie in (0, 1e-6]");
  }
  const int n = g.vertex_count();

  // symmetric conjugate S = I - D^{-1/2} A D^{-1/2}, similar to Delta
  std::vector<double> s(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> inv_sqrt_d(n);
  for (int v = 0; v < n; ++v) inv_sqrt_d[v] = 1.0 / std::sqrt(double(g.degree(v)));
  for (int v = 0; v < n; ++v) s[static_cast<size_t>(v) * n + v] = 1.0;
  for (const auto& [u, v] : g.edges()) {
    double coupling = -inv_sqrt_d[u] * inv_sqrt_d[v];
    s[static_cast<size_t>(u) * n + v] = coupling;
    s[static_cast<size_t>(v) * n + u] = coupling;
  }

  DiscreteSpectrum spec;
  spec.zero_tolerance = zero_tolerance;
  spec.eigenvalues = jacobi_eigenvalues(std::move(s), n);

  for (double& lam : spec.eigenvalues) {
    if (std::abs(lam) <= zero_tolerance) lam = 0.0;
    if (std::abs(lam - 2.0) <= zero_tolerance) lam = 2.0;
  }
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
  for (double lam : spec.eigenvalues) {
    if (lam == 0.0) ++spec.kernel_dim_0;
    if (lam == 2.0) ++spec.kernel_dim_2;
  }
  return spec;
}

std::complex<double> discrete_zeta(const DiscreteSpectrum& spec,
                                   std::complex<double> s) {
  std::complex<double> sum = 0.0;
  for (double lam : spec.eigenvalues) {
    if (lam == 0.0) continue;
    sum += std::exp(-s * std::log(lam));
  }
  return sum;
}

}  // namespace qgz
