#pragma once
// Coherent states with general quasiperiodic boundary labels j0 in [0,1)^2.
// The wavefunctions gain the Bloch-type phase e^(i 2 pi j0k) under
// phi_k -> phi_k + 2 pi; for j0 components in {0, 1/2} every formula here
// reduces to the corresponding symmetric-sector formula through the theta
// half-period shift identity.
//
// All computations use the (l, alpha) parametrized forms; j0 is reduced
// mod 1 on input, since integer shifts of j0 only relabel the lattice.

#include <array>

#include "tcs/torus.hpp"

namespace tcs {

std::array<double, 2> normalize_j0(std::array<double, 2> j0);

// Prefactor e^((l+h).j0 + i(alpha-beta).j0 - |j0|^2) times two theta3
// factors at (alpha_k - beta_k)/(2 pi) - i (l_k + h_k - 2 j0k)/(2 pi),
// tau = i/pi. z is the bra, w the ket.
complex overlap_general(const TorusPhasePoint& z, const TorusPhasePoint& w,
                        std::array<double, 2> j0, Tolerance tol = {});

// The z-form of the overlap with non-integer powers (z_k^* w_k)^(-j0k).
// Multivalued in principle; this wrapper fixes the principal logarithm
// branch, which agrees with overlap_general while |alpha_z - alpha_w| < pi
// per axis.
complex overlap_general_zform(const TorusPhasePoint& z, const TorusPhasePoint& w,
                              std::array<double, 2> j0, Tolerance tol = {});

// <J_k> = j0k + theta log-derivative at l_k - j0k.
std::array<double, 2> expect_J_general(std::array<double, 2> l,
                                       std::array<double, 2> j0,
                                       Tolerance tol = {});

// <U_k> = e^(-1/4) e^(i alpha_k) theta2/theta3 at i (l_k - j0k) / pi.
std::array<complex, 2> expect_U_general(const TorusPhasePoint& p,
                                        std::array<double, 2> j0,
                                        Tolerance tol = {});
std::array<complex, 2> relative_expect_U_general(const TorusPhasePoint& p,
                                                 std::array<double, 2> j0,
                                                 Tolerance tol = {});

// <phi|l,alpha> for the general-j0 state, including the per-axis prefactor
// e^(j0 (l + i(phi - alpha)) - j0^2/2) carrying the quasiperiodic phase.
complex wavefunction_general(const TorusPhasePoint& p, double phi1, double phi2,
                             std::array<double, 2> j0, Tolerance tol = {});

// Density with shifted arguments; peaked at phi = alpha for any j0. For
// j0 = (0, 0) the evaluation path coincides with the sector-(0,0) density,
// so the grids agree bit-for-bit.
DensityGrid density_general(const TorusPhasePoint& p, std::array<double, 2> j0,
                            int n1, int n2, Tolerance tol = {});
DensityGrid density_general_serial(const TorusPhasePoint& p,
                                   std::array<double, 2> j0, int n1, int n2,
                                   Tolerance tol = {});

}  // namespace tcs
