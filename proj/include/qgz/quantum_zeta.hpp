#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qgz/discrete_spectrum.hpp"
#include "qgz/graph.hpp"

namespace qgz {

/// Quantum-graph spectral data obtained from a discrete spectrum:
/// k_j = arccos(1 - lambda_j)/L together with the multiplicities of the
/// Dirichlet ladder (n pi/L)^2.
struct TransferredSpectrum {
  std::vector<double> k_values;  // ascending, k_values[0] = 0, size V
  std::vector<double> phases;    // a_j = k_j L / (2 pi) in [0, 1/2]
  double edge_length = 1.0;      // L
  int betti = 0;
  int mult_even = 0;  // multiplicity of (2n pi/L)^2
  int mult_odd = 0;   // multiplicity of ((2n+1) pi/L)^2
  int edge_count = 0;
  int vertex_count = 0;
};

enum class Method { hurwitz, series, closed_form, direct_sum, bernoulli };

struct ZetaValue {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
  Method method = Method::hurwitz;
};

struct SpectralInvariants {
  double vacuum_energy = 0.0;            // E_c = Z(-1/2)/2, units 1/L
  double casimir_force = 0.0;            // -dE_c/dL = E_c/L, positive = repulsive
  double log_spectral_determinant = 0.0; // -Z'(0)
};

/// Multiplicity of the Dirichlet eigenvalues (n pi/L)^2 in the quantum
/// spectrum: ((beta-1) + 2 dim ker(Delta), (beta-1) + 2 dim ker(Delta-2I)).
std::pair<int, int> dirichlet_multiplicities(const Graph& g,
                                             const DiscreteSpectrum& spec);

/// Spectrum transfer k_j = arccos(clamp(1 - lambda_j, -1, 1)) / L.
TransferredSpectrum spectrum_transfer(const Graph& g,
                                      const DiscreteSpectrum& spec, double L);

/// Convenience: eigensolve + transfer in one call.
TransferredSpectrum transfer(const Graph& g, double L,
                             double zero_tolerance = 1e-9);

/// Quantum spectral zeta function via the Hurwitz representation,
/// analytic for all s != 1/2.
ZetaValue quantum_zeta(const TransferredSpectrum& ts, std::complex<double> s);

/// Quantum spectral zeta function via the cosine series (Re(s) < 0),
/// with the inner Chebyshev-coefficient sum cross-checked term by term
/// for n <= 30.
ZetaValue quantum_zeta_series(const TransferredSpectrum& ts,
                              std::complex<double> s, double tail_tol);

/// sum_{j>=2} cos(k_j L n).
double discrete_cosine_sum(const TransferredSpectrum& ts, int n);

/// The same sum by the literal Chebyshev-coefficient expansion
/// sum_r (-2)^r n/(n+r) C(n+r,2r) Z(-r), evaluated in extended precision
/// (n <= 30; the binomial growth is ~4^n with alternating signs).
double discrete_cosine_sum_coefficient_form(const TransferredSpectrum& ts,
                                            int n);

/// E_c = Z(-1/2)/2 through the exact Bernoulli values of zeta_H(-1, a).
double vacuum_energy(const TransferredSpectrum& ts);

/// -dE_c/dL = E_c/L (E_c scales as 1/L on equilateral graphs).
double casimir_force(const TransferredSpectrum& ts);

/// det'(L) = exp(-Z'(0)), with Z'(0) assembled analytically from the
/// Riemann term and the Hurwitz-pair derivatives at s = 0.
double spectral_determinant(const TransferredSpectrum& ts);
double log_spectral_determinant(const TransferredSpectrum& ts);

SpectralInvariants spectral_invariants(const TransferredSpectrum& ts);

/// Closed form for the equilateral complete bipartite graph K_{m,p},
/// valid for Re(s) < 0.
ZetaValue complete_bipartite_zeta_closed(int m, int p, double L,
                                         std::complex<double> s);

}  // namespace qgz
