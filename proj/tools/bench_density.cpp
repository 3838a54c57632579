// Times the density-grid kernels: serial reference vs the OpenMP row
// partition, plus the direct-summation oracle density for scale. Verifies on
// the way that the parallel grids match the serial ones bit-for-bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tcs/oracle.hpp"
#include "tcs/quasiperiodic.hpp"
#include "tcs/torus.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool identical(const tcs::DensityGrid& a, const tcs::DensityGrid& b) {
  for (size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] != b.values[i]) return false;
  }
  return true;
}

}  // namespace

int main() {
  const double pi = std::numbers::pi;
  const tcs::TorusPhasePoint p(1.0, 1.0, pi, pi / 3.0);
  const tcs::TorusSector sector = tcs::make_sector(0.0, 0.0);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial[s]", "parallel[s]",
              "speedup", "bitwise");

  for (int n : {128, 256, 512}) {
    auto t0 = clock_type::now();
    const tcs::DensityGrid serial = tcs::density_serial(p, sector, n, n);
    const double ts = seconds_since(t0);

    t0 = clock_type::now();
    const tcs::DensityGrid parallel = tcs::density(p, sector, n, n);
    const double tp = seconds_since(t0);

    char name[64];
    std::snprintf(name, sizeof(name), "density %dx%d", n, n);
    std::printf("%-28s %10.4f %10.4f %7.2fx %s\n", name, ts, tp, ts / tp,
                identical(serial, parallel) ? "match" : "MISMATCH");
  }

  for (int n : {128, 256}) {
    auto t0 = clock_type::now();
    const tcs::DensityGrid serial =
        tcs::density_general_serial(p, {0.3, 0.6}, n, n);
    const double ts = seconds_since(t0);

    t0 = clock_type::now();
    const tcs::DensityGrid parallel = tcs::density_general(p, {0.3, 0.6}, n, n);
    const double tp = seconds_since(t0);

    char name[64];
    std::snprintf(name, sizeof(name), "density_general %dx%d", n, n);
    std::printf("%-28s %10.4f %10.4f %7.2fx %s\n", name, ts, tp, ts / tp,
                identical(serial, parallel) ? "match" : "MISMATCH");
  }

  {
    auto t0 = clock_type::now();
    const double norm = tcs::oracle::density_norm(p, sector);
    const double td = seconds_since(t0);
    std::printf("%-28s %21.4f          norm=%.12g\n", "oracle density 512x512",
                td, norm);
  }
  return 0;
}
