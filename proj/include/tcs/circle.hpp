#pragma once
// Coherent states for a quantum particle on a circle: eigenvectors of
// Z = e^(-J + 1/2) U labelled by classical phase-space points (l, alpha),
// with overlaps and expectation values in closed theta form.

#include <vector>

#include "tcs/theta.hpp"

namespace tcs {

// Boundary label of the angular-momentum lattice Z + j0. Time reversal
// admits only j0 = 0 (integer spectrum) and j0 = 1/2 (half-integer).
struct Sector1D {
  double j0 = 0.0;
  bool time_reversal_symmetric() const { return j0 == 0.0 || j0 == 0.5; }
};

// Classical label on the cylinder phase space; z = e^(-l + i alpha).
// alpha is reduced into [0, 2 pi) on construction: half-integer overlaps are
// antiperiodic in alpha, so the stored representative fixes the branch, and
// the coefficient sums below are the ground truth for that choice.
class PhasePoint1D {
 public:
  PhasePoint1D() = default;
  PhasePoint1D(double l, double alpha);

  double l() const { return l_; }
  double alpha() const { return alpha_; }
  complex z() const;

 private:
  double l_ = 0.0;
  double alpha_ = 0.0;
};

// Truncated coefficient window of a state over the sector lattice.
// Index i corresponds to the lattice point j = center + (i - half_width).
struct StateVector1D {
  Sector1D sector;
  double center = 0.0;
  int half_width = 0;
  std::vector<complex> coeffs;
  double tail_bound = 0.0;  // dropped coefficients are below this, absolutely

  int size() const { return 2 * half_width + 1; }
  double j(int i) const { return center + (i - half_width); }
  double norm_sq() const;
};

// <j|l,alpha> = e^(l j - i j alpha - j^2/2). Rejects j off the sector lattice.
complex amplitude1d(double j, const PhasePoint1D& p, const Sector1D& sector);

// Window centered on the lattice point nearest l, grown until the boundary
// coefficients fall below tail_eps relative to the peak coefficient.
StateVector1D build_state1d(const PhasePoint1D& p, const Sector1D& sector,
                            double tail_eps);

// <z|w> = theta_3 (integer) or theta_2 (half-integer) at
// v = (alpha_w - alpha_z)/(2 pi) + i (l_z + l_w)/(2 pi), tau = i/pi.
complex overlap1d(const PhasePoint1D& z, const PhasePoint1D& w,
                  const Sector1D& sector, Tolerance tol = {});

// <J> = ratio of lattice Gaussian sums; exact at lattice momenta.
double expect_J1d(double l, const Sector1D& sector, Tolerance tol = {});

// <U> = e^(-1/4) e^(i alpha) theta_a / theta_b at i l / pi, with
// (a, b) = (2, 3) for j0 = 0 and (3, 2) for j0 = 1/2.
complex expect_U1d(const PhasePoint1D& p, const Sector1D& sector,
                   Tolerance tol = {});

// <U> at (l, alpha) divided by its value at the phase-space origin; isolates
// the classical phase e^(i alpha).
complex relative_expect_U1d(const PhasePoint1D& p, const Sector1D& sector,
                            Tolerance tol = {});

// Predicted absolute deviation of <J> from l: 2 pi e^(-pi^2) sin(2 pi l).
double classical_error_law(double l);

// Ladder action U^step as a lattice shift of the window.
StateVector1D apply_ladder1d(const StateVector1D& s, int step);

// Relative norm residual of (Z - z)|s> over the interior of the window,
// with Z acting as the coefficient map c_j -> e^(-j + 1/2) c_(j-1).
double z_eigen_residual1d(const StateVector1D& s, const PhasePoint1D& p);

}  // namespace tcs
