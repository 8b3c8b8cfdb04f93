#include "qgz/series_kernels.hpp"

#include <cmath>

namespace qgz::kernels {

double cos_power_sum_serial(double theta, double p, std::int64_t n0,
                            std::int64_t n1) {
  double sum = 0.0;
  for (std::int64_t n = n0; n <= n1; ++n) {
    double dn = static_cast<double>(n);
    sum += std::pow(dn, p) * std::cos(theta * dn);
  }
  return sum;
}

double cos_power_sum(double theta, double p, std::int64_t n0, std::int64_t n1) {
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t n = n0; n <= n1; ++n) {
    double dn = static_cast<double>(n);
    sum += std::pow(dn, p) * std::cos(theta * dn);
  }
  return sum;
}

std::complex<double> cos_power_sum_serial(double theta, std::complex<double> p,
                                          std::int64_t n0, std::int64_t n1) {
  double re = 0.0, im = 0.0;
  for (std::int64_t n = n0; n <= n1; ++n) {
    double dn = static_cast<double>(n);
    std::complex<double> t = std::exp(p * std::log(dn)) * std::cos(theta * dn);
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

std::complex<double> cos_power_sum(double theta, std::complex<double> p,
                                   std::int64_t n0, std::int64_t n1) {
  double re = 0.0, im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t n = n0; n <= n1; ++n) {
    double dn = static_cast<double>(n);
    std::complex<double> t = std::exp(p * std::log(dn)) * std::cos(theta * dn);
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

}  // namespace qgz::kernels
