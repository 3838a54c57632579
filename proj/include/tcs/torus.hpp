#pragma once
// Coherent states for a quantum particle on a two-torus. The state space is
// a tensor product of two circle factors; the four time-reversal-symmetric
// sectors differ only in the theta2/theta3 assignment per axis, so every
// sector-dependent formula is table-driven.

#include <array>
#include <utility>
#include <vector>

#include "tcs/circle.hpp"

namespace tcs {

struct TorusSector {
  std::array<Sector1D, 2> axis{};
  bool time_reversal_symmetric() const {
    return axis[0].time_reversal_symmetric() && axis[1].time_reversal_symmetric();
  }
};

// Shorthand for TorusSector{{Sector1D{j01}, Sector1D{j02}}}.
TorusSector make_sector(double j01, double j02);

struct TorusPhasePoint {
  std::array<PhasePoint1D, 2> axis{};
  TorusPhasePoint() = default;
  TorusPhasePoint(double l1, double l2, double alpha1, double alpha2)
      : axis{PhasePoint1D(l1, alpha1), PhasePoint1D(l2, alpha2)} {}
  double l(int k) const { return axis[k].l(); }
  double alpha(int k) const { return axis[k].alpha(); }
};

// Rectangular coefficient window over the lattice (Z + j01) x (Z + j02),
// row-major with axis 1 slow.
struct TorusState {
  TorusSector sector;
  std::array<double, 2> center{};
  std::array<int, 2> half_width{};
  std::vector<complex> coeffs;
  double tail_bound = 0.0;

  int size(int k) const { return 2 * half_width[k] + 1; }
  double j(int k, int i) const { return center[k] + (i - half_width[k]); }
  const complex& coeff(int i1, int i2) const { return coeffs[i1 * size(1) + i2]; }
  complex& coeff(int i1, int i2) { return coeffs[i1 * size(1) + i2]; }
  double norm_sq() const;
};

// Probability density p(phi1, phi2) sampled at phi_k = 2 pi m / n_k,
// m = 0 .. n_k - 1 (inclusive start, exclusive end), row-major with phi1 as
// the slow index. The mean of a normalized density is 1 under the measure
// d(phi1) d(phi2) / (4 pi^2).
struct DensityGrid {
  int n1 = 0;
  int n2 = 0;
  std::vector<double> values;

  double at(int m1, int m2) const { return values[m1 * n2 + m2]; }
  double phi1(int m1) const;
  double phi2(int m2) const;
  double mean() const;
  std::pair<int, int> argmax() const;
};

// <j|l,alpha> = e^(l.j - i alpha.j - |j|^2/2); factorizes over the axes.
complex amplitude(double j1, double j2, const TorusPhasePoint& p,
                  const TorusSector& sector);

// Tensor product of two 1-D windows.
TorusState build_state(const TorusPhasePoint& p, const TorusSector& sector,
                       double tail_eps);

// Product of two 1-D overlaps, theta kinds per sector. Symmetric sectors only.
complex overlap(const TorusPhasePoint& z, const TorusPhasePoint& w,
                const TorusSector& sector, Tolerance tol = {});

std::array<double, 2> expect_J(std::array<double, 2> l, const TorusSector& sector,
                               Tolerance tol = {});
std::array<complex, 2> expect_U(const TorusPhasePoint& p, const TorusSector& sector,
                                Tolerance tol = {});
std::array<complex, 2> relative_expect_U(const TorusPhasePoint& p,
                                         const TorusSector& sector,
                                         Tolerance tol = {});

// <phi|l,alpha> as a product of two theta factors with tau = i/(2 pi) at
// arguments (phi_k - alpha_k - i l_k)/(2 pi).
complex position_wavefunction(const TorusPhasePoint& p, double phi1, double phi2,
                              const TorusSector& sector, Tolerance tol = {});

// |<phi|l,alpha>|^2 / <l,alpha|l,alpha> on an n1 x n2 grid. `density` runs the
// rows in parallel; `density_serial` is the reference loop kept for testing.
// Per-point arithmetic is identical, so the two agree bit-for-bit.
DensityGrid density(const TorusPhasePoint& p, const TorusSector& sector, int n1,
                    int n2, Tolerance tol = {});
DensityGrid density_serial(const TorusPhasePoint& p, const TorusSector& sector,
                           int n1, int n2, Tolerance tol = {});

// Ladder action U_axis^step as a lattice shift of the window.
TorusState apply_ladder(const TorusState& s, int axis, int step);

// Antiunitary time reversal: coefficient at j becomes the conjugated
// coefficient from -j. Requires a sector lattice symmetric about 0.
TorusState time_reversal(const TorusState& s);

// Relative norm residual of (Z_axis - z_axis)|s> over the window interior.
double z_eigen_residual(const TorusState& s, const TorusPhasePoint& p, int axis);

namespace detail {

// Shared density kernel: per axis k the numerator is
// |theta_kind((phi - alpha_k - i mu_k)/(2 pi) | i/(2 pi))|^2 and the
// denominator theta_kind(i mu_k / pi | i / pi). Sector densities use
// mu = l with kinds per sector; general-j0 densities use theta3 with
// mu = l - j0.
DensityGrid eval_density(const TorusPhasePoint& p, std::array<ThetaKind, 2> kinds,
                         std::array<double, 2> mu, int n1, int n2, bool parallel,
                         Tolerance tol);

}  // namespace detail

}  // namespace tcs
