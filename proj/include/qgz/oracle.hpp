#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "qgz/graph.hpp"
#include "qgz/quantum_zeta.hpp"

namespace qgz {
namespace oracle {

/// Signed and unsigned vertex-edge incidence matrices together with the
/// vertex degrees.  Q has one +1 (x_e = 0 end) and one -1 (x_e = L end)
/// per column; M marks both endpoints with 1.
struct IncidenceMatrices {
  int rows = 0;  // V
  int cols = 0;  // E
  std::vector<int> Q;  // row-major V x E
  std::vector<int> M;
  std::vector<int> degrees;
};

IncidenceMatrices incidence_matrices(const Graph& g);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<long long> a, int rows, int cols);

/// Dirichlet multiplicities from incidence-matrix ranks only:
/// (dim ker Q + dim ker Q^T, dim ker M + dim ker M^T).
std::pair<int, int> multiplicity_by_rank(const Graph& g);

/// Brute-force quantum zeta for Re(s) > 1/2: explicit eigenvalue ladders
/// merged in ascending order, with an Euler-Maclaurin tail correction per
/// ladder.  Independent of the Hurwitz evaluator.
ZetaValue direct_zeta_sum(const TransferredSpectrum& ts,
                          std::complex<double> s, double tail_tol);

/// Central difference (f(x0+h) - f(x0-h)) / (2h).
double finite_difference_deriv(const std::function<double(double)>& f,
                               double x0, double h);

/// Right side of the Hurwitz-pair identity:
/// (2 Gamma(1-2s) (2 pi)^{2s} / pi) sin(s pi) sum n^{2s-1} cos(2 pi n a),
/// truncated when the Dirichlet-test tail bound drops below tail_tol.
/// Test oracle for the restricted-domain Fourier expansion, s real < 0.
double hurwitz_pair_fourier(double s, double a, double tail_tol);

}  // namespace oracle
}  // namespace qgz
