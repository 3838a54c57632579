#pragma once
// Brute-force reference implementations: wide fixed-window lattice sums and
// direct-summation densities used to validate every closed theta form. This
// module deliberately shares no evaluation code with the certified theta
// engine -- amplitudes are written out inline and windows are fixed, not
// adaptive -- so the two paths have independent failure modes. Wide sums use
// compensated (Neumaier) accumulation to keep rounding below the validation
// tolerances. Slow on purpose.

#include <array>

#include "tcs/torus.hpp"

namespace tcs::oracle {

struct OracleConfig {
  int half_width = 50;  // lattice window is [-half_width, half_width] per axis
  int quad_n1 = 512;    // density quadrature grid
  int quad_n2 = 512;
};

// Compensated scalar accumulator (Neumaier variant of Kahan summation).
struct NeumaierSum {
  double sum = 0.0;
  double compensation = 0.0;
  void add(double x);
  double value() const { return sum + compensation; }
};

// <z|w> summed directly over the wide window of (Z + j01) x (Z + j02).
// Requires half_width >= 4 (1 + max |l|) so Gaussian tails are negligible.
complex overlap(const TorusPhasePoint& z, const TorusPhasePoint& w,
                const TorusSector& sector, const OracleConfig& cfg = {});

// Low-order monomials in J_k and U_k evaluated from coefficient shifts (U)
// and multiplications (J).
enum class Observable { J1, J2, J1J1, J2J2, J1J2, U1, U2, U1U1, U2U2, U1U2 };

complex expectation(Observable op, const TorusPhasePoint& p,
                    const TorusSector& sector, const OracleConfig& cfg = {});

// Quadrature mean of the direct-summation density of the coherent state at
// p; equals 1 for any state by completeness of the position kets.
double density_norm(const TorusPhasePoint& p, const TorusSector& sector,
                    const OracleConfig& cfg = {});

// Mean of the direct-summation density of an arbitrary coefficient window.
double density_mean(const TorusState& s, int n1, int n2);

// Windowed direct sum of <phi|s>, compensated per point. The test oracle for
// the closed-form position wavefunction.
complex wavefunction(const TorusState& s, double phi1, double phi2);

// Fixed wide symmetric summation of the theta series, n = -half_width ..
// half_width, accumulated in ascending order with compensation.
complex theta3_wide(complex v, complex tau, int half_width = 50);
complex theta2_wide(complex v, complex tau, int half_width = 50);

// One-axis sums used by the circle-level checks.
complex overlap1d_sum(const PhasePoint1D& z, const PhasePoint1D& w, double j0,
                      int half_width = 50);
double expect_J1d_sum(double l, double j0, int half_width = 50);
complex expect_U1d_sum(const PhasePoint1D& p, double j0, int half_width = 50);

}  // namespace tcs::oracle
