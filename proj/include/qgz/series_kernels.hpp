#pragma once

#include <complex>
#include <cstdint>

namespace qgz::kernels {

/// sum_{n=n0}^{n1} n^p cos(theta n), real exponent.
/// _serial is the reference implementation; the unsuffixed variant uses
/// OpenMP when available and must agree with the reference to roundoff.
double cos_power_sum_serial(double theta, double p, std::int64_t n0,
                            std::int64_t n1);
double cos_power_sum(double theta, double p, std::int64_t n0, std::int64_t n1);

/// Same sum with complex exponent: sum n^p cos(theta n) = sum
/// exp(p ln n) cos(theta n).
std::complex<double> cos_power_sum_serial(double theta, std::complex<double> p,
                                          std::int64_t n0, std::int64_t n1);
std::complex<double> cos_power_sum(double theta, std::complex<double> p,
                                   std::int64_t n0, std::int64_t n1);

}  // namespace qgz::kernels
