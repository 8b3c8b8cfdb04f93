#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qgz/series_kernels.hpp"

using namespace qgz::kernels;

TEST_CASE("parallel kernel matches serial reference") {
  for (double theta : {0.4, 1.5707963267948966, 3.141592653589793}) {
    for (double p : {-1.2, -2.0, -3.5}) {
      double serial = cos_power_sum_serial(theta, p, 1, 200000);
      double parallel = cos_power_sum(theta, p, 1, 200000);
      CHECK(std::abs(serial - parallel) < 1e-12);
    }
  }
}

TEST_CASE("complex kernel matches serial reference") {
  std::complex<double> p(-1.7, 0.4);
  auto serial = cos_power_sum_serial(0.9, p, 1, 50000);
  auto parallel = cos_power_sum(0.9, p, 1, 50000);
  CHECK(std::abs(serial - parallel) < 1e-12);
}

TEST_CASE("complex kernel reduces to real kernel") {
  std::complex<double> p(-2.2, 0.0);
  auto c = cos_power_sum_serial(1.1, p, 1, 10000);
  double r = cos_power_sum_serial(1.1, -2.2, 1, 10000);
  CHECK(c.imag() == 0.0);
  CHECK(std::abs(c.real() - r) < 1e-13);
}

TEST_CASE("known alternating sum") {
  // sum (-1)^n / n^2 = -eta(2) = -pi^2/12
  double s = cos_power_sum(3.141592653589793, -2.0, 1, 4000000);
  CHECK(std::abs(s + 0.8224670334241132) < 1e-6);
}
