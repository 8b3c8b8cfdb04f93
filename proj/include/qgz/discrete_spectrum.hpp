#pragma once

#include <complex>
#include <vector>

#include "qgz/graph.hpp"

namespace qgz {

/// Full spectrum of the normalized Laplacian of a connected graph,
/// sorted ascending and clamped into [0,2] within zero_tolerance.
struct DiscreteSpectrum {
  std::vector<double> eigenvalues;  // lambda_1 <= ... <= lambda_V
  int kernel_dim_0 = 0;             // dim ker(Delta)
  int kernel_dim_2 = 0;             // dim ker(Delta - 2I)
  double zero_tolerance = 1e-9;
};

/// Normalized (harmonic) Laplacian: 1 on the diagonal, -1/d_v in column v
/// for u ~ v, 0 otherwise.  Row-major V x V.
std::vector<double> normalized_laplacian(const Graph& g);

/// Spectrum of the normalized Laplacian, computed via the symmetric
/// conjugate S = I - D^{-1/2} A D^{-1/2} with a cyclic Jacobi solver.
DiscreteSpectrum eigenvalues(const Graph& g, double zero_tolerance = 1e-9);

/// Discrete spectral zeta function: sum of lambda^{-s} over nonzero
/// eigenvalues (principal branch).
std::complex<double> discrete_zeta(const DiscreteSpectrum& spec,
                                   std::complex<double> s);

/// Eigenvalues (ascending) of a dense symmetric matrix, cyclic Jacobi.
/// Exposed for tests.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

}  // namespace qgz
