#include "tcs/torus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
const complex tau_overlap(0.0, 1.0 / pi);
const complex tau_position(0.0, 1.0 / two_pi);

void check_symmetric(const TorusSector& sector, const char* op) {
  if (!sector.time_reversal_symmetric()) {
    throw std::invalid_argument(std::string(op) +
                                ": sector requires j0 components in {0, 1/2}; "
                                "use the general-j0 operations instead");
  }
}

ThetaKind kind_of(const Sector1D& s) {
  return s.j0 == 0.0 ? ThetaKind::theta3 : ThetaKind::theta2;
}

}  // namespace

TorusSector make_sector(double j01, double j02) {
  return TorusSector{{Sector1D{j01}, Sector1D{j02}}};
}

double TorusState::norm_sq() const {
  double sum = 0.0;
  for (const complex& c : coeffs) sum += std::norm(c);
  return sum;
}

double DensityGrid::phi1(int m1) const { return two_pi * m1 / n1; }
double DensityGrid::phi2(int m2) const { return two_pi * m2 / n2; }

double DensityGrid::mean() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / values.size();
}

std::pair<int, int> DensityGrid::argmax() const {
  int best = 0;
  for (int i = 1; i < int(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return {best / n2, best % n2};
}

complex amplitude(double j1, double j2, const TorusPhasePoint& p,
                  const TorusSector& sector) {
  for (int k = 0; k < 2; ++k) {
    const double j = k == 0 ? j1 : j2;
    const double frac = j - sector.axis[k].j0;
    if (std::abs(frac - std::round(frac)) > 1e-9) {
      throw std::invalid_argument(
          "amplitude: j does not lie on the sector lattice Z^2 + j0");
    }
  }
  const double re = p.l(0) * j1 + p.l(1) * j2 - 0.5 * (j1 * j1 + j2 * j2);
  const double im = -(p.alpha(0) * j1 + p.alpha(1) * j2);
  return std::exp(complex(re, im));
}

TorusState build_state(const TorusPhasePoint& p, const TorusSector& sector,
                       double tail_eps) {
  const StateVector1D s1 = build_state1d(p.axis[0], sector.axis[0], tail_eps);
  const StateVector1D s2 = build_state1d(p.axis[1], sector.axis[1], tail_eps);
  TorusState s;
  s.sector = sector;
  s.center = {s1.center, s2.center};
  s.half_width = {s1.half_width, s2.half_width};
  s.coeffs.resize(size_t(s1.size()) * s2.size());
  double peak1 = 0.0, peak2 = 0.0;
  for (const complex& c : s1.coeffs) peak1 = std::max(peak1, std::abs(c));
  for (const complex& c : s2.coeffs) peak2 = std::max(peak2, std::abs(c));
  for (int i1 = 0; i1 < s1.size(); ++i1) {
    for (int i2 = 0; i2 < s2.size(); ++i2) {
      s.coeff(i1, i2) = s1.coeffs[i1] * s2.coeffs[i2];
    }
  }
  s.tail_bound = tail_eps * peak1 * peak2;
  return s;
}

complex overlap(const TorusPhasePoint& z, const TorusPhasePoint& w,
                const TorusSector& sector, Tolerance tol) {
  check_symmetric(sector, "overlap");
  return overlap1d(z.axis[0], w.axis[0], sector.axis[0], tol) *
         overlap1d(z.axis[1], w.axis[1], sector.axis[1], tol);
}

std::array<double, 2> expect_J(std::array<double, 2> l, const TorusSector& sector,
                               Tolerance tol) {
  check_symmetric(sector, "expect_J");
  return {expect_J1d(l[0], sector.axis[0], tol), expect_J1d(l[1], sector.axis[1], tol)};
}

std::array<complex, 2> expect_U(const TorusPhasePoint& p, const TorusSector& sector,
                                Tolerance tol) {
  check_symmetric(sector, "expect_U");
  return {expect_U1d(p.axis[0], sector.axis[0], tol),
          expect_U1d(p.axis[1], sector.axis[1], tol)};
}

std::array<complex, 2> relative_expect_U(const TorusPhasePoint& p,
                                         const TorusSector& sector, Tolerance tol) {
  check_symmetric(sector, "relative_expect_U");
  return {relative_expect_U1d(p.axis[0], sector.axis[0], tol),
          relative_expect_U1d(p.axis[1], sector.axis[1], tol)};
}

complex position_wavefunction(const TorusPhasePoint& p, double phi1, double phi2,
                              const TorusSector& sector, Tolerance tol) {
  check_symmetric(sector, "position_wavefunction");
  complex value = 1.0;
  for (int k = 0; k < 2; ++k) {
    const double phi = k == 0 ? phi1 : phi2;
    const complex u((phi - p.alpha(k)) / two_pi, -p.l(k) / two_pi);
    value *= theta(kind_of(sector.axis[k]), {u, tau_position}, tol);
  }
  return value;
}

namespace detail {

DensityGrid eval_density(const TorusPhasePoint& p, std::array<ThetaKind, 2> kinds,
                         std::array<double, 2> mu, int n1, int n2, bool parallel,
                         Tolerance tol) {
  if (n1 < 8 || n2 < 8) {
    throw std::invalid_argument("density: grid sizes must be at least 8");
  }
  const double den =
      theta(kinds[0], {complex(0.0, mu[0] / pi), tau_overlap}, tol).real() *
      theta(kinds[1], {complex(0.0, mu[1] / pi), tau_overlap}, tol).real();

  DensityGrid grid;
  grid.n1 = n1;
  grid.n2 = n2;
  grid.values.resize(size_t(n1) * n2);

  // Each point depends only on its own (m1, m2), with a fixed per-point
  // summation order inside the theta engine, so the partitioning of rows
  // across threads cannot change any value.
#pragma omp parallel for schedule(static) if (parallel)
  for (int m1 = 0; m1 < n1; ++m1) {
    const double phi1 = two_pi * m1 / n1;
    const complex u1((phi1 - p.alpha(0)) / two_pi, -mu[0] / two_pi);
    const double a1 = std::norm(theta(kinds[0], {u1, tau_position}, tol));
    for (int m2 = 0; m2 < n2; ++m2) {
      const double phi2 = two_pi * m2 / n2;
      const complex u2((phi2 - p.alpha(1)) / two_pi, -mu[1] / two_pi);
      const double a2 = std::norm(theta(kinds[1], {u2, tau_position}, tol));
      grid.values[size_t(m1) * n2 + m2] = a1 * a2 / den;
    }
  }
  return grid;
}

}  // namespace detail

DensityGrid density(const TorusPhasePoint& p, const TorusSector& sector, int n1,
                    int n2, Tolerance tol) {
  check_symmetric(sector, "density");
  return detail::eval_density(p, {kind_of(sector.axis[0]), kind_of(sector.axis[1])},
                              {p.l(0), p.l(1)}, n1, n2, true, tol);
}

DensityGrid density_serial(const TorusPhasePoint& p, const TorusSector& sector,
                           int n1, int n2, Tolerance tol) {
  check_symmetric(sector, "density");
  return detail::eval_density(p, {kind_of(sector.axis[0]), kind_of(sector.axis[1])},
                              {p.l(0), p.l(1)}, n1, n2, false, tol);
}

TorusState apply_ladder(const TorusState& s, int axis, int step) {
  TorusState out = s;
  out.center[axis] += step;
  return out;
}

TorusState time_reversal(const TorusState& s) {
  if (!s.sector.time_reversal_symmetric()) {
    throw std::invalid_argument(
        "time_reversal: sector lattice is not symmetric about 0");
  }
  TorusState out = s;
  out.center = {-s.center[0], -s.center[1]};
  const int n1 = s.size(0), n2 = s.size(1);
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < n2; ++i2) {
      out.coeff(i1, i2) = std::conj(s.coeff(n1 - 1 - i1, n2 - 1 - i2));
    }
  }
  return out;
}

double z_eigen_residual(const TorusState& s, const TorusPhasePoint& p, int axis) {
  const complex z = p.axis[axis].z();
  double num = 0.0;
  const int n1 = s.size(0), n2 = s.size(1);
  for (int i1 = (axis == 0 ? 1 : 0); i1 < n1; ++i1) {
    for (int i2 = (axis == 1 ? 1 : 0); i2 < n2; ++i2) {
      const double j = s.j(axis, axis == 0 ? i1 : i2);
      const complex prev = axis == 0 ? s.coeff(i1 - 1, i2) : s.coeff(i1, i2 - 1);
      num += std::norm(prev * std::exp(-j + 0.5) - z * s.coeff(i1, i2));
    }
  }
  return std::sqrt(num / s.norm_sq());
}

}  // namespace tcs
