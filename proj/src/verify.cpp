#include "tcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tcs/embedding.hpp"
#include "tcs/oracle.hpp"
#include "tcs/quasiperiodic.hpp"
#include "tcs/theta.hpp"
#include "tcs/torus.hpp"

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  // magnitude bounded away from zero, random sign
  double momentum(double lo, double hi) {
    const double m = uniform(lo, hi);
    return gen() & 1 ? m : -m;
  }
  complex box(double re, double im) {
    return {uniform(-re, re), uniform(-im, im)};
  }
};

double rel_err(complex a, complex b, double floor = 0.0) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

double wrap_to_pi(double x) {
  x = std::fmod(x, two_pi);
  if (x > pi) x -= two_pi;
  if (x < -pi) x += two_pi;
  return x;
}

const std::array<TorusSector, 4> all_sectors = {
    make_sector(0.0, 0.0), make_sector(0.0, 0.5), make_sector(0.5, 0.0),
    make_sector(0.5, 0.5)};

const std::array<complex, 3> tau_set = {complex(0.0, 1.0 / pi),
                                        complex(0.0, 1.0 / two_pi),
                                        complex(0.1, 0.5)};

// Random integer-mode coefficient window, used as a band-limited grid
// function via sample_state.
TorusState random_mode_state(Rng& rng, int half_width) {
  TorusState s;
  s.sector = make_sector(0.0, 0.0);
  s.center = {0.0, 0.0};
  s.half_width = {half_width, half_width};
  s.coeffs.resize(size_t(s.size(0)) * s.size(1));
  for (complex& c : s.coeffs) c = rng.box(1.0, 1.0);
  return s;
}

TorusPhasePoint random_point(Rng& rng, double lmax) {
  return TorusPhasePoint(rng.momentum(0.1, lmax), rng.momentum(0.1, lmax),
                         rng.uniform(0.0, two_pi), rng.uniform(0.0, two_pi));
}

// <a|b> summed over the lattice points both windows cover.
complex window_inner(const TorusState& a, const TorusState& b) {
  complex sum = 0.0;
  for (int i1 = 0; i1 < b.size(0); ++i1) {
    for (int i2 = 0; i2 < b.size(1); ++i2) {
      const int k1 = int(std::lround(b.j(0, i1) - a.j(0, 0)));
      const int k2 = int(std::lround(b.j(1, i2) - a.j(1, 0)));
      if (k1 < 0 || k1 >= a.size(0) || k2 < 0 || k2 >= a.size(1)) continue;
      sum += std::conj(a.coeff(k1, k2)) * b.coeff(i1, i2);
    }
  }
  return sum;
}

// ---- individual checks -------------------------------------------------

double theta_vs_wide(Rng& rng, ThetaKind kind) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const complex v = rng.box(2.0, 2.0);
    const complex tau = tau_set[i % tau_set.size()];
    const complex certified = theta(kind, {v, tau});
    const complex wide = kind == ThetaKind::theta3
                             ? oracle::theta3_wide(v, tau)
                             : oracle::theta2_wide(v, tau);
    worst = std::max(worst, rel_err(certified, wide));
  }
  return worst;
}

double theta_evenness(Rng& rng, ThetaKind kind) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const complex v = rng.box(2.0, 0.2);
    const complex tau = tau_set[i % tau_set.size()];
    worst = std::max(worst, std::abs(theta(kind, {v, tau}) - theta(kind, {-v, tau})));
  }
  return worst;
}

double theta_periodicity(Rng& rng, ThetaKind kind) {
  const double sign = kind == ThetaKind::theta3 ? 1.0 : -1.0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const complex v = rng.box(2.0, 0.2);
    const complex tau = tau_set[i % tau_set.size()];
    worst = std::max(worst, std::abs(theta(kind, {v + 1.0, tau}) -
                                     sign * theta(kind, {v, tau})));
  }
  return worst;
}

double theta_tail_doubling(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const complex v = rng.box(2.0, 2.0);
    const complex tau = tau_set[i % tau_set.size()];
    for (double offset : {0.0, 0.5}) {
      const int n = detail::certified_half_width(
          -pi * tau.imag(), two_pi * std::abs(v.imag()), 1e-14, offset, false);
      worst = std::max(worst,
                       std::abs(detail::lattice_theta_sum(offset, v, tau, n) -
                                detail::lattice_theta_sum(offset, v, tau, 2 * n)));
    }
  }
  return worst;
}

double theta_half_period_identity(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    complex v;
    do {
      v = rng.box(2.0, 2.0);
    } while (std::abs(v) > 2.0);
    const complex tau = tau_set[i % tau_set.size()];
    for (ThetaKind kind : {ThetaKind::theta3, ThetaKind::theta2}) {
      const double residual = half_period_shift_residual(kind, v, tau);
      const double scale =
          std::max(1.0, std::abs(theta(kind, {v + tau / 2.0, tau})));
      worst = std::max(worst, residual / scale);
    }
  }
  return worst;
}

double circle_overlap_vs_sum(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const PhasePoint1D z(rng.momentum(0.1, 3.0), rng.uniform(0.0, two_pi));
    const PhasePoint1D w(rng.momentum(0.1, 3.0), rng.uniform(0.0, two_pi));
    for (double j0 : {0.0, 0.5}) {
      const complex closed = overlap1d(z, w, Sector1D{j0});
      const complex brute = oracle::overlap1d_sum(z, w, j0);
      worst = std::max(worst, rel_err(closed, brute));
    }
  }
  return worst;
}

double circle_ladder_shift(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Sector1D sector{i % 2 == 0 ? 0.0 : 0.5};
    const PhasePoint1D p(rng.momentum(0.1, 2.0), rng.uniform(0.0, two_pi));
    const StateVector1D s = build_state1d(p, sector, 1e-12);
    const StateVector1D shifted = apply_ladder1d(s, 1);
    for (int k = 0; k < shifted.size(); ++k) {
      worst = std::max(worst, std::abs(shifted.coeffs[k] -
                                       amplitude1d(shifted.j(k) - 1.0, p, sector)));
    }
  }
  return worst;
}

double circle_eigen_residual(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Sector1D sector{i % 2 == 0 ? 0.0 : 0.5};
    const PhasePoint1D p(rng.momentum(0.1, 3.0), rng.uniform(0.0, two_pi));
    worst = std::max(worst, z_eigen_residual1d(build_state1d(p, sector, 1e-14), p));
  }
  return worst;
}

double circle_J_lattice_exact() {
  double worst = 0.0;
  for (double l = -2.0; l <= 2.0; l += 1.0) {
    worst = std::max(worst, std::abs(expect_J1d(l, Sector1D{0.0}) - l));
  }
  for (double l = -1.5; l <= 1.5; l += 1.0) {
    worst = std::max(worst, std::abs(expect_J1d(l, Sector1D{0.5}) - l));
  }
  return worst;
}

double circle_J_sup_deviation() {
  double worst = 0.0;
  for (int i = -300; i <= 300; ++i) {
    const double l = i / 100.0;
    for (double j0 : {0.0, 0.5}) {
      worst = std::max(worst, std::abs(expect_J1d(l, Sector1D{j0}) - l));
    }
  }
  return worst;
}

double circle_J_error_law() {
  double worst = 0.0;
  for (int i = -300; i <= 300; ++i) {
    const double l = i / 100.0;
    const double law = std::abs(classical_error_law(l));
    if (std::abs(std::sin(two_pi * l)) <= 0.2) continue;
    const double dev = std::abs(expect_J1d(l, Sector1D{0.0}) - l);
    worst = std::max(worst, std::abs(dev - law) / law);
  }
  return worst;
}

double circle_expect_vs_oracle(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const PhasePoint1D p(rng.momentum(0.1, 3.0), rng.uniform(0.0, two_pi));
    for (double j0 : {0.0, 0.5}) {
      const Sector1D sector{j0};
      worst = std::max(worst, rel_err(expect_J1d(p.l(), sector),
                                      oracle::expect_J1d_sum(p.l(), j0)));
      worst = std::max(worst, rel_err(expect_U1d(p, sector),
                                      oracle::expect_U1d_sum(p, j0)));
    }
  }
  return worst;
}

double circle_relative_U_phase(Rng& rng) {
  double worst = 0.0;
  for (int i = -30; i <= 30; ++i) {
    const double l = i / 10.0;
    const double alpha = rng.uniform(0.0, two_pi);
    for (double j0 : {0.0, 0.5}) {
      const complex rel = relative_expect_U1d(PhasePoint1D(l, alpha), Sector1D{j0});
      worst = std::max(worst, std::abs(rel - std::exp(complex(0.0, alpha))));
    }
  }
  return worst;
}

double torus_amplitude_factorization(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 2.0);
    const double j1 = std::round(rng.uniform(-4.0, 4.0)) + sector.axis[0].j0;
    const double j2 = std::round(rng.uniform(-4.0, 4.0)) + sector.axis[1].j0;
    const complex joint = amplitude(j1, j2, p, sector);
    const complex split = amplitude1d(j1, p.axis[0], sector.axis[0]) *
                          amplitude1d(j2, p.axis[1], sector.axis[1]);
    worst = std::max(worst, rel_err(joint, split, 1e-30));
  }
  return worst;
}

double torus_overlap_vs_oracle(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint z = random_point(rng, 3.0);
    const TorusPhasePoint w = random_point(rng, 3.0);
    worst = std::max(worst, rel_err(overlap(z, w, sector),
                                    oracle::overlap(z, w, sector)));
  }
  return worst;
}

double torus_expect_vs_oracle(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 3.0);
    const auto J = expect_J({p.l(0), p.l(1)}, sector);
    const auto U = expect_U(p, sector);
    worst = std::max(worst, rel_err(J[0], oracle::expectation(oracle::Observable::J1, p, sector)));
    worst = std::max(worst, rel_err(J[1], oracle::expectation(oracle::Observable::J2, p, sector)));
    worst = std::max(worst, rel_err(U[0], oracle::expectation(oracle::Observable::U1, p, sector)));
    worst = std::max(worst, rel_err(U[1], oracle::expectation(oracle::Observable::U2, p, sector)));
  }
  return worst;
}

double torus_expect_U_phase(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 2.0);
    const auto U = expect_U(p, sector);
    for (int k = 0; k < 2; ++k) {
      worst = std::max(worst, std::abs(wrap_to_pi(std::arg(U[k]) - p.alpha(k))));
    }
  }
  return worst;
}

double torus_wavefunction_vs_direct(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 2.0);
    const TorusState s = build_state(p, sector, 1e-15);
    const double phi1 = rng.uniform(0.0, two_pi);
    const double phi2 = rng.uniform(0.0, two_pi);
    const complex closed = position_wavefunction(p, phi1, phi2, sector);
    const complex direct = oracle::wavefunction(s, phi1, phi2);
    // floor the denominator at 1% of the density peak: theta functions have
    // zeros on the grid, where a plain relative error is ill-conditioned
    const double peak =
        std::abs(position_wavefunction(p, p.alpha(0), p.alpha(1), sector));
    worst = std::max(worst, rel_err(closed, direct, 0.01 * peak));
  }
  return worst;
}

double torus_density_normalization(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    const TorusPhasePoint p = random_point(rng, 2.0);
    worst = std::max(worst, std::abs(density(p, all_sectors[i], 256, 256).mean() - 1.0));
  }
  return worst;
}

double torus_density_peak() {
  const TorusPhasePoint p(1.0, 1.0, pi, pi / 3.0);
  double worst = 0.0;
  const DensityGrid g = density(p, make_sector(0.0, 0.0), 256, 256);
  const auto [m1, m2] = g.argmax();
  worst = std::max(worst, std::abs(wrap_to_pi(g.phi1(m1) - p.alpha(0))) / (pi / g.n1));
  worst = std::max(worst, std::abs(wrap_to_pi(g.phi2(m2) - p.alpha(1))) / (pi / g.n2));
  return worst;  // in units of half a grid cell
}

double torus_density_determinism(Rng& rng) {
  const TorusPhasePoint p = random_point(rng, 2.0);
  const TorusSector sector = make_sector(0.0, 0.5);
  const DensityGrid serial = density_serial(p, sector, 64, 64);
  double worst = 0.0;
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const DensityGrid par = density(p, sector, 64, 64);
    for (size_t k = 0; k < par.values.size(); ++k) {
      worst = std::max(worst, std::abs(par.values[k] - serial.values[k]));
    }
  }
  omp_set_num_threads(saved);
#else
  const DensityGrid par = density(p, sector, 64, 64);
  for (size_t k = 0; k < par.values.size(); ++k) {
    worst = std::max(worst, std::abs(par.values[k] - serial.values[k]));
  }
#endif
  return worst;
}

double torus_time_reversal(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 2.0);
    const TorusState s = build_state(p, sector, 1e-13);
    const TorusState reversed = time_reversal(s);

    // T|l,alpha> = |-l,alpha>: momentum flips, the angle does not.
    const TorusPhasePoint flipped(-p.l(0), -p.l(1), p.alpha(0), p.alpha(1));
    const TorusState expected = build_state(flipped, sector, 1e-13);
    double peak = 0.0;
    for (const complex& c : s.coeffs) peak = std::max(peak, std::abs(c));
    for (int i1 = 0; i1 < s.size(0); ++i1) {
      for (int i2 = 0; i2 < s.size(1); ++i2) {
        worst = std::max(worst, std::abs(reversed.coeff(i1, i2) -
                                         expected.coeff(i1, i2)) /
                                    peak);
      }
    }

    // antiunitarity <Ts|Ts'> = <s'|s> via coefficient sums over the common
    // lattice window
    const TorusPhasePoint q = random_point(rng, 2.0);
    const TorusState t = build_state(q, sector, 1e-13);
    const complex lhs = window_inner(reversed, time_reversal(t));
    const complex rhs = window_inner(t, s);
    worst = std::max(worst, rel_err(lhs, rhs));

    // T^2 = identity
    const TorusState twice = time_reversal(reversed);
    for (size_t k = 0; k < s.coeffs.size(); ++k) {
      worst = std::max(worst, std::abs(twice.coeffs[k] - s.coeffs[k]));
    }
  }
  return worst;
}

double state_window_tail(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const TorusPhasePoint p = random_point(rng, 2.5);
    const TorusState s = build_state(p, sector, 1e-12);
    double boundary = 0.0;
    for (int i1 = 0; i1 < s.size(0); ++i1) {
      boundary = std::max({boundary, std::abs(s.coeff(i1, 0)),
                           std::abs(s.coeff(i1, s.size(1) - 1))});
    }
    for (int i2 = 0; i2 < s.size(1); ++i2) {
      boundary = std::max({boundary, std::abs(s.coeff(0, i2)),
                           std::abs(s.coeff(s.size(0) - 1, i2))});
    }
    worst = std::max(worst, boundary / s.tail_bound);
  }
  return worst;  // must stay below 1
}

double general_reduction(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const TorusSector sector = all_sectors[i % 4];
    const std::array<double, 2> j0{sector.axis[0].j0, sector.axis[1].j0};
    const TorusPhasePoint z = random_point(rng, 1.5);
    const TorusPhasePoint w = random_point(rng, 1.5);
    worst = std::max(worst, rel_err(overlap_general(z, w, j0),
                                    overlap(z, w, sector), 1e-8));
    const auto Jg = expect_J_general({z.l(0), z.l(1)}, j0);
    const auto J = expect_J({z.l(0), z.l(1)}, sector);
    const auto Ug = expect_U_general(z, j0);
    const auto U = expect_U(z, sector);
    for (int k = 0; k < 2; ++k) {
      worst = std::max(worst, std::abs(Jg[k] - J[k]));
      worst = std::max(worst, rel_err(Ug[k], U[k]));
    }
  }
  // density route comparison at the four sectors, scaled by the grid peak
  for (int i = 0; i < 4; ++i) {
    const TorusSector sector = all_sectors[i];
    const std::array<double, 2> j0{sector.axis[0].j0, sector.axis[1].j0};
    const TorusPhasePoint p = random_point(rng, 1.5);
    const DensityGrid a = density_general(p, j0, 32, 32);
    const DensityGrid b = density(p, sector, 32, 32);
    const auto [m1, m2] = b.argmax();
    const double peak = b.at(m1, m2);
    for (size_t k = 0; k < a.values.size(); ++k) {
      worst = std::max(worst, std::abs(a.values[k] - b.values[k]) / peak);
    }
  }
  return worst;
}

double general_bitexact_at_zero_label(Rng& rng) {
  const TorusPhasePoint p = random_point(rng, 2.0);
  const DensityGrid a = density_general(p, {0.0, 0.0}, 32, 32);
  const DensityGrid b = density(p, make_sector(0.0, 0.0), 32, 32);
  double worst = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) {
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  }
  worst = std::max(worst, std::abs(overlap_general(p, p, {0.0, 0.0}) -
                                   overlap(p, p, make_sector(0.0, 0.0))));
  return worst;
}

double general_vs_oracle(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::array<double, 2> j0{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    const TorusSector gsector = make_sector(j0[0], j0[1]);
    const TorusPhasePoint z = random_point(rng, 2.0);
    const TorusPhasePoint w = random_point(rng, 2.0);
    worst = std::max(worst, rel_err(overlap_general(z, w, j0),
                                    oracle::overlap(z, w, gsector), 1e-8));
    const auto J = expect_J_general({z.l(0), z.l(1)}, j0);
    const auto U = expect_U_general(z, j0);
    worst = std::max(worst, rel_err(J[0], oracle::expectation(oracle::Observable::J1, z, gsector)));
    worst = std::max(worst, rel_err(J[1], oracle::expectation(oracle::Observable::J2, z, gsector)));
    worst = std::max(worst, rel_err(U[0], oracle::expectation(oracle::Observable::U1, z, gsector)));
    worst = std::max(worst, rel_err(U[1], oracle::expectation(oracle::Observable::U2, z, gsector)));

    const TorusState s = build_state(z, gsector, 1e-15);
    const double phi1 = rng.uniform(0.0, two_pi);
    const double phi2 = rng.uniform(0.0, two_pi);
    const complex closed = wavefunction_general(z, phi1, phi2, j0);
    const complex direct = oracle::wavefunction(s, phi1, phi2);
    const double peak =
        std::abs(wavefunction_general(z, z.alpha(0), z.alpha(1), j0));
    worst = std::max(worst, rel_err(closed, direct, 0.01 * peak));
  }
  return worst;
}

double general_quasiperiodic_phase(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::array<double, 2> j0{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    const TorusPhasePoint p = random_point(rng, 1.5);
    // sample near the density peak so the wavefunction is well conditioned
    const double phi1 = p.alpha(0) + rng.uniform(-1.0, 1.0);
    const double phi2 = p.alpha(1) + rng.uniform(-1.0, 1.0);
    const complex base = wavefunction_general(p, phi1, phi2, j0);
    const complex up1 = wavefunction_general(p, phi1 + two_pi, phi2, j0);
    const complex up2 = wavefunction_general(p, phi1, phi2 + two_pi, j0);
    worst = std::max(worst, std::abs(up1 / base - std::exp(complex(0.0, two_pi * j0[0]))));
    worst = std::max(worst, std::abs(up2 / base - std::exp(complex(0.0, two_pi * j0[1]))));
  }
  return worst;
}

double general_zform_consistency(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::array<double, 2> j0{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    // keep per-axis angle differences inside (-pi, pi) where the principal
    // logarithm matches the parametrized form
    const double a1 = rng.uniform(0.5, two_pi - 0.5);
    const double a2 = rng.uniform(0.5, two_pi - 0.5);
    const TorusPhasePoint z(rng.momentum(0.1, 2.0), rng.momentum(0.1, 2.0), a1, a2);
    const TorusPhasePoint w(rng.momentum(0.1, 2.0), rng.momentum(0.1, 2.0),
                            a1 + rng.uniform(-0.4, 0.4), a2 + rng.uniform(-0.4, 0.4));
    worst = std::max(worst, rel_err(overlap_general_zform(z, w, j0),
                                    overlap_general(z, w, j0), 1e-8));
  }
  return worst;
}

double embedding_isometry(Rng& rng) {
  double worst = 0.0;
  for (double rho : {0.1, 0.5, 0.9}) {
    const EmbeddedTorusGeometry geom(1.0, rho);
    for (int i = 0; i < 34; ++i) {
      const GridFunction f = sample_state(random_mode_state(rng, 6), 32, 32, false);
      const GridFunction g = sample_state(random_mode_state(rng, 6), 32, 32, false);
      worst = std::max(worst, std::abs(inner_flat(f, g) -
                                       inner_embedded(map_V(f, geom),
                                                      map_V(g, geom), geom)));
    }
  }
  return worst;
}

double embedding_J1_U_invariance(Rng& rng) {
  double worst = 0.0;
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  const GridFunction ft = sample_state(random_mode_state(rng, 6), 48, 48, false);
  // V J1 V^-1 and V U_k V^-1 act exactly as J1 and U_k
  const GridFunction lhs = map_V(apply_J1(map_V_inverse(ft, geom)), geom);
  const GridFunction rhs = apply_J1(ft);
  for (size_t k = 0; k < lhs.values.size(); ++k) {
    worst = std::max(worst, std::abs(lhs.values[k] - rhs.values[k]));
  }
  for (int axis = 0; axis < 2; ++axis) {
    const GridFunction lu = map_V(apply_U(map_V_inverse(ft, geom), axis), geom);
    const GridFunction ru = apply_U(ft, axis);
    for (size_t k = 0; k < lu.values.size(); ++k) {
      worst = std::max(worst, std::abs(lu.values[k] - ru.values[k]));
    }
  }
  return worst;
}

double embedding_Jtilde2_conjugation(Rng& rng) {
  double worst = 0.0;
  for (double rho : {0.1, 0.5, 0.9}) {
    const EmbeddedTorusGeometry geom(1.0, rho);
    for (int i = 0; i < 3; ++i) {
      const GridFunction f = sample_state(random_mode_state(rng, 6), 24, 192, false);
      const GridFunction lhs = apply_Jtilde2(map_V(f, geom), geom);
      const GridFunction rhs = map_V(apply_J2(f), geom);
      for (size_t k = 0; k < lhs.values.size(); ++k) {
        worst = std::max(worst, std::abs(lhs.values[k] - rhs.values[k]));
      }
    }
  }
  return worst;
}

double embedding_Jtilde2_selfadjoint(Rng& rng) {
  double worst = 0.0;
  for (double rho : {0.1, 0.5, 0.9}) {
    const EmbeddedTorusGeometry geom(1.0, rho);
    for (int i = 0; i < 3; ++i) {
      const GridFunction f = sample_state(random_mode_state(rng, 6), 24, 96, false);
      const GridFunction g = sample_state(random_mode_state(rng, 6), 24, 96, false);
      const complex lhs = inner_embedded(f, apply_Jtilde2(g, geom), geom);
      const complex rhs = std::conj(inner_embedded(g, apply_Jtilde2(f, geom), geom));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double embedding_windowed_probability(Rng& rng) {
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  const TorusPhasePoint p = random_point(rng, 1.5);
  const TorusState s = build_state(p, make_sector(0.0, 0.0), 1e-14);
  double worst = 0.0;
  const PhiWindow small{pi - 0.025, pi / 3.0 - 0.025, 0.05, 0.05};
  const auto [pe, pf] = density_invariance_check(s, geom, small);
  worst = std::max(worst, std::abs(pe - pf));
  const auto [fe, ff] = density_invariance_check(s, geom, PhiWindow{});
  worst = std::max(worst, std::abs(fe - ff));
  return worst;
}

double embedding_full_window_norm(Rng& rng) {
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  const TorusPhasePoint p = random_point(rng, 1.5);
  const TorusState s = build_state(p, make_sector(0.0, 0.0), 1e-14);
  const auto [pe, pf] = density_invariance_check(s, geom, PhiWindow{});
  return std::max(std::abs(pe - 1.0), std::abs(pf - 1.0));
}

double oracle_density_uniform() {
  TorusState s;
  s.sector = make_sector(0.0, 0.0);
  s.center = {0.0, 0.0};
  s.half_width = {2, 2};
  s.coeffs.assign(25, 0.0);
  s.coeff(2, 2) = 1.0;  // c_j = delta_{j,0}
  return std::abs(oracle::density_mean(s, 64, 64) - 1.0);
}

double oracle_density_convergence(Rng& rng) {
  const TorusPhasePoint p = random_point(rng, 2.0);
  const TorusSector sector = make_sector(0.0, 0.0);
  oracle::OracleConfig coarse;
  coarse.quad_n1 = coarse.quad_n2 = 256;
  const double fine = oracle::density_norm(p, sector);
  const double half = oracle::density_norm(p, sector, coarse);
  return std::max(std::abs(fine - 1.0), std::abs(fine - half));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  int index = 0;
  const auto run = [&](const std::string& name, double tolerance, auto&& fn) {
    Rng rng(opts.seed + 7919 * index++);
    const double err = fn(rng);
    results.push_back({name, err, tolerance, err <= tolerance});
  };

  run("theta3_vs_wide_sum", 1e-12, [](Rng& r) { return theta_vs_wide(r, ThetaKind::theta3); });
  run("theta2_vs_wide_sum", 1e-12, [](Rng& r) { return theta_vs_wide(r, ThetaKind::theta2); });
  run("theta3_evenness", 2e-14, [](Rng& r) { return theta_evenness(r, ThetaKind::theta3); });
  run("theta2_evenness", 2e-14, [](Rng& r) { return theta_evenness(r, ThetaKind::theta2); });
  run("theta3_periodicity", 2e-14, [](Rng& r) { return theta_periodicity(r, ThetaKind::theta3); });
  run("theta2_antiperiodicity", 2e-14, [](Rng& r) { return theta_periodicity(r, ThetaKind::theta2); });
  run("theta_tail_doubling", 1e-14, [](Rng& r) { return theta_tail_doubling(r); });
  run("theta_half_period_identity", 1e-12, [](Rng& r) { return theta_half_period_identity(r); });
  run("circle_overlap_vs_sum", 1e-10, [](Rng& r) { return circle_overlap_vs_sum(r); });
  run("circle_ladder_shift", 1e-15, [](Rng& r) { return circle_ladder_shift(r); });
  run("circle_eigen_residual", 1e-10, [](Rng& r) { return circle_eigen_residual(r); });
  run("circle_expect_J_lattice_exact", 1e-12, [](Rng&) { return circle_J_lattice_exact(); });
  run("circle_expect_J_sup_deviation", 4e-4, [](Rng&) { return circle_J_sup_deviation(); });
  run("circle_expect_J_error_law", 0.1, [](Rng&) { return circle_J_error_law(); });
  run("circle_expect_vs_oracle", 1e-10, [](Rng& r) { return circle_expect_vs_oracle(r); });
  run("circle_relative_U_phase", 1e-3, [](Rng& r) { return circle_relative_U_phase(r); });
  run("torus_amplitude_factorization", 1e-14, [](Rng& r) { return torus_amplitude_factorization(r); });
  run("torus_overlap_vs_oracle", 1e-10, [](Rng& r) { return torus_overlap_vs_oracle(r); });
  run("torus_expect_vs_oracle", 1e-10, [](Rng& r) { return torus_expect_vs_oracle(r); });
  run("torus_expect_U_phase", 1e-12, [](Rng& r) { return torus_expect_U_phase(r); });
  run("torus_wavefunction_vs_direct", 1e-10, [](Rng& r) { return torus_wavefunction_vs_direct(r); });
  run("torus_density_normalization", 1e-6, [](Rng& r) { return torus_density_normalization(r); });
  run("torus_density_peak_at_alpha", 1.0, [](Rng&) { return torus_density_peak(); });
  run("torus_density_thread_determinism", 0.0, [](Rng& r) { return torus_density_determinism(r); });
  run("torus_time_reversal", 1e-12, [](Rng& r) { return torus_time_reversal(r); });
  run("state_window_tail_bound", 1.0, [](Rng& r) { return state_window_tail(r); });
  run("general_reduction_to_sectors", 1e-12, [](Rng& r) { return general_reduction(r); });
  run("general_bitexact_at_zero_label", 0.0, [](Rng& r) { return general_bitexact_at_zero_label(r); });
  run("general_vs_oracle", 1e-10, [](Rng& r) { return general_vs_oracle(r); });
  run("general_quasiperiodic_phase", 1e-12, [](Rng& r) { return general_quasiperiodic_phase(r); });
  run("general_zform_consistency", 1e-12, [](Rng& r) { return general_zform_consistency(r); });
  run("embedding_isometry", 1e-10, [](Rng& r) { return embedding_isometry(r); });
  run("embedding_J1_U_invariance", 1e-10, [](Rng& r) { return embedding_J1_U_invariance(r); });
  run("embedding_Jtilde2_conjugation", 1e-8, [](Rng& r) { return embedding_Jtilde2_conjugation(r); });
  run("embedding_Jtilde2_selfadjoint", 1e-8, [](Rng& r) { return embedding_Jtilde2_selfadjoint(r); });
  run("embedding_windowed_probability", 1e-10, [](Rng& r) { return embedding_windowed_probability(r); });
  run("embedding_full_window_norm", 1e-6, [](Rng& r) { return embedding_full_window_norm(r); });
  run("oracle_density_uniform_state", 1e-15, [](Rng&) { return oracle_density_uniform(); });
  run("oracle_density_convergence", 1e-6, [](Rng& r) { return oracle_density_convergence(r); });

  return results;
}

}  // namespace tcs
