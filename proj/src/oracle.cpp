#include "qgz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "qgz/errors.hpp"
#include "qgz/series_kernels.hpp"
#include "qgz/special_functions.hpp"

namespace qgz {
namespace oracle {

namespace {
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
cplx rpow(double x, cplx z) { return std::exp(z * std::log(x)); }
}  // namespace

IncidenceMatrices incidence_matrices(const Graph& g) {
  IncidenceMatrices im;
  im.rows = g.vertex_count();
  im.cols = g.edge_count();
  im.degrees = g.degrees();
  im.Q.assign(static_cast<size_t>(im.rows) * im.cols, 0);
  im.M.assign(static_cast<size_t>(im.rows) * im.cols, 0);
  for (int e = 0; e < im.cols; ++e) {
    auto [u, w] = g.edges()[e];
    im.Q[static_cast<size_t>(u) * im.cols + e] = 1;   // x_e = 0 end
    im.Q[static_cast<size_t>(w) * im.cols + e] = -1;  // x_e = L end
    im.M[static_cast<size_t>(u) * im.cols + e] = 1;
    im.M[static_cast<size_t>(w) * im.cols + e] = 1;
  }
  return im;
}

int integer_rank(std::vector<long long> a, int rows, int cols) {
  auto at = [&](int i, int j) -> long long& {
    return a[static_cast<size_t>(i) * cols + j];
  };
  int rank = 0;
  long long prev_pivot = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot_row = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      for (int j = 0; j < cols; ++j) std::swap(at(pivot_row, j), at(rank, j));
    }
    // fraction-free update: a_ij <- (p a_ij - a_ic a_rj) / prev_pivot
    long long pivot = at(rank, col);
    for (int i = rank + 1; i < rows; ++i) {
      long long factor = at(i, col);
      for (int j = 0; j < cols; ++j) {
        at(i, j) = (pivot * at(i, j) - factor * at(rank, j)) / prev_pivot;
      }
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::pair<int, int> multiplicity_by_rank(const Graph& g) {
  IncidenceMatrices im = incidence_matrices(g);
  const int v = im.rows, e = im.cols;
  std::vector<long long> q(im.Q.begin(), im.Q.end());
  std::vector<long long> m(im.M.begin(), im.M.end());
  int rank_q = integer_rank(std::move(q), v, e);
  int rank_m = integer_rank(std::move(m), v, e);
  // eigenspace = sine span (ker Q resp. ker M) + cosine span (ker Q^T
  // resp. ker M^T, which equal ker Delta and ker Delta-2I)
  return {(e - rank_q) + (v - rank_q), (e - rank_m) + (v - rank_m)};
}

ZetaValue direct_zeta_sum(const TransferredSpectrum& ts,
                          std::complex<double> s, double tail_tol) {
  if (s.real() <= 0.5) {
    throw DomainError("direct summation requires Re(s) > 1/2");
  }
  if (tail_tol <= 0.0) {
    throw DomainError("tail_tol must be positive");
  }

  const double L = ts.edge_length;
  struct Ladder {
    double weight;
    double offset;
    double step;
    std::int64_t n_start;
  };
  std::vector<Ladder> ladders;
  ladders.push_back({double(ts.betti - 1), 0.0, kPi / L, 1});
  ladders.push_back({2.0, 0.0, 2.0 * kPi / L, 1});
  for (size_t j = 1; j < ts.k_values.size(); ++j) {
    ladders.push_back({1.0, ts.k_values[j], 2.0 * kPi / L, 0});
    ladders.push_back({1.0, -ts.k_values[j], 2.0 * kPi / L, 1});
  }

  auto evaluate = [&](std::int64_t n_cut, cplx& value, double& tail_err) {
    std::vector<std::pair<double, double>> head;  // (k, weight)
    cplx tail = 0.0;
    tail_err = 0.0;
    for (const Ladder& lad : ladders) {
      for (std::int64_t n = lad.n_start; n < lad.n_start + n_cut; ++n) {
        head.emplace_back(lad.offset + lad.step * double(n), lad.weight);
      }
      // Euler-Maclaurin tail from n0 = n_start + n_cut
      const double n0 = double(lad.n_start + n_cut);
      const double y = lad.offset + lad.step * n0;
      const double h = lad.step;
      const cplx z = 2.0 * s;
      cplx ts_tail = rpow(y, 1.0 - z) / (h * (z - 1.0));  // integral
      ts_tail += 0.5 * rpow(y, -z);
      cplx d1 = -h * z * rpow(y, -z - 1.0);
      cplx d3 = -h * h * h * z * (z + 1.0) * (z + 2.0) * rpow(y, -z - 3.0);
      cplx d5 = -std::pow(h, 5) * z * (z + 1.0) * (z + 2.0) * (z + 3.0) *
                (z + 4.0) * rpow(y, -z - 5.0);
      ts_tail += -d1 / 12.0 + d3 / 720.0 - d5 / 30240.0;
      tail += lad.weight * ts_tail;
      double d7 = std::abs(std::pow(h, 7) * z * (z + 1.0) * (z + 2.0) *
                           (z + 3.0) * (z + 4.0) * (z + 5.0) * (z + 6.0)) *
                  std::pow(y, -2.0 * s.real() - 7.0);
      tail_err += std::abs(lad.weight) * 2.0 * d7 / 1209600.0;
    }
    // merge ascending by eigenvalue, then accumulate small terms first
    std::sort(head.begin(), head.end());
    cplx head_sum = 0.0;
    for (auto it = head.rbegin(); it != head.rend(); ++it) {
      head_sum += it->second * rpow(it->first, -2.0 * s);
    }
    value = head_sum + tail;
  };

  cplx value;
  double tail_err;
  std::int64_t n_cut = 64;
  for (;;) {
    evaluate(n_cut, value, tail_err);
    if (tail_err <= tail_tol || n_cut >= (1 << 20)) break;
    n_cut *= 2;
  }
  if (tail_err > tail_tol) {
    throw NoConvergence("direct sum tail bound not reached");
  }
  return {value, tail_err, Method::direct_sum};
}

double finite_difference_deriv(const std::function<double(double)>& f,
                               double x0, double h) {
  return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
}

double hurwitz_pair_fourier(double s, double a, double tail_tol) {
  if (s >= 0.0) {
    throw DomainError("Fourier expansion is valid for Re(s) < 0");
  }
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("phase a must lie in (0,1)");
  }
  const double pref = 2.0 *
                      std::exp(std::real(log_gamma(cplx(1.0 - 2.0 * s)))) *
                      std::pow(2.0 * kPi, 2.0 * s) / kPi * std::sin(s * kPi);
  const double theta = 2.0 * kPi * a;
  const double bound_const = 1.0 / std::abs(std::sin(kPi * a));
  const double var_fac = 1.0 + std::abs(2.0 * s - 1.0) / (1.0 - 2.0 * s);
  double nreq = std::pow(std::abs(pref) * bound_const * var_fac / tail_tol,
                         1.0 / (1.0 - 2.0 * s));
  auto n_max = static_cast<std::int64_t>(std::ceil(nreq)) + 1;
  if (n_max > 500'000'000) {
    throw NoConvergence("Fourier tail bound not reachable within cap");
  }
  return pref * kernels::cos_power_sum(theta, 2.0 * s - 1.0, 1, n_max);
}

}  // namespace oracle
}  // namespace qgz
