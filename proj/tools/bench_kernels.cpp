// Compares the serial reference summation kernels against the
// OpenMP-parallel production kernels.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qgz/series_kernels.hpp"

namespace {

double seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel kernels fall back to serial\n");
#endif

  const double theta = 2.0943951023931953;  // 2 pi / 3
  const double p = -1.5;

  for (std::int64_t n : {std::int64_t(1'000'000), std::int64_t(10'000'000),
                         std::int64_t(100'000'000)}) {
    double t0 = seconds();
    double serial = qgz::kernels::cos_power_sum_serial(theta, p, 1, n);
    double t1 = seconds();
    double parallel = qgz::kernels::cos_power_sum(theta, p, 1, n);
    double t2 = seconds();
    std::printf(
        "N=%-10lld serial %8.3fs  parallel %8.3fs  speedup %5.2fx  |diff| "
        "%.3e\n",
        static_cast<long long>(n), t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
        std::fabs(serial - parallel));
  }
  return 0;
}
