#include "tcs/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace tcs {

std::string format_sig(double x, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, x);
  return buf;
}

void write_density_csv(std::ostream& os, const DensityGrid& grid,
                       const std::string& comment, int sig_digits) {
  os << "# " << comment << "\n";
  os << "# grid: phi_k = 2*pi*m/n_k, m = 0..n_k-1; rows ordered phi1-major\n";
  os << "phi1,phi2,p\n";
  for (int m1 = 0; m1 < grid.n1; ++m1) {
    const std::string phi1 = format_sig(grid.phi1(m1), sig_digits);
    for (int m2 = 0; m2 < grid.n2; ++m2) {
      os << phi1 << ',' << format_sig(grid.phi2(m2), sig_digits) << ','
         << format_sig(grid.at(m1, m2), sig_digits) << '\n';
    }
  }
  const auto [a1, a2] = grid.argmax();
  os << "# mean=" << format_sig(grid.mean(), sig_digits)
     << " argmax_phi1=" << format_sig(grid.phi1(a1), sig_digits)
     << " argmax_phi2=" << format_sig(grid.phi2(a2), sig_digits)
     << " peak=" << format_sig(grid.at(a1, a2), sig_digits) << "\n";
}

void write_density_pgm(std::ostream& os, const DensityGrid& grid,
                       const std::string& comment) {
  const auto [a1, a2] = grid.argmax();
  const double peak = grid.at(a1, a2);
  os << "P2\n";
  os << "# " << comment << "\n";
  os << "# values scaled by peak " << format_sig(peak)
     << " mean=" << format_sig(grid.mean()) << "\n";
  os << grid.n2 << ' ' << grid.n1 << "\n65535\n";
  for (int m1 = 0; m1 < grid.n1; ++m1) {
    for (int m2 = 0; m2 < grid.n2; ++m2) {
      const long v =
          peak > 0.0 ? std::lround(grid.at(m1, m2) / peak * 65535.0) : 0;
      os << v << (m2 + 1 == grid.n2 ? '\n' : ' ');
    }
  }
}

}  // namespace tcs
