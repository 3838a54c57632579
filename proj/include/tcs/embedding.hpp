#pragma once
// Functional representation on the torus embedded in R^3, with surface
// measure weight w(phi2) = 1 + (r/R) cos(phi2). The unitary map
// V f = f / sqrt(w) carries the flat representation into the embedded one;
// probability over a coordinate window is representation independent.
//
// Functions live on uniform periodic grids with spectral (discrete Fourier)
// differentiation; the periodic rectangle rule is exact for trigonometric
// polynomials below the Nyquist mode.

#include <numbers>
#include <utility>

#include "tcs/torus.hpp"

namespace tcs {

struct EmbeddedTorusGeometry {
  double outer_radius = 1.0;  // R
  double inner_radius = 0.0;  // r
  EmbeddedTorusGeometry(double R, double r);
  double rho() const { return inner_radius / outer_radius; }
};

// n1 x n2 complex samples on the same grid convention as DensityGrid.
struct GridFunction {
  int n1 = 0;
  int n2 = 0;
  std::vector<complex> values;

  GridFunction() = default;
  GridFunction(int n1_, int n2_) : n1(n1_), n2(n2_), values(size_t(n1_) * n2_) {}
  const complex& at(int m1, int m2) const { return values[m1 * n2 + m2]; }
  complex& at(int m1, int m2) { return values[m1 * n2 + m2]; }
};

// (1/4 pi^2) integral of conj(f) g over the torus, rectangle rule.
complex inner_flat(const GridFunction& f, const GridFunction& g);

// Same with the surface measure weight (1 + rho cos phi2).
complex inner_embedded(const GridFunction& f, const GridFunction& g,
                       const EmbeddedTorusGeometry& geom);

// V f = f / sqrt(1 + rho cos phi2) and its inverse.
GridFunction map_V(const GridFunction& f, const EmbeddedTorusGeometry& geom);
GridFunction map_V_inverse(const GridFunction& f, const EmbeddedTorusGeometry& geom);

// Flat-representation operators: J_k = -i d/dphi_k (spectral), U_k = e^(i phi_k).
GridFunction apply_J1(const GridFunction& f);
GridFunction apply_J2(const GridFunction& f);
GridFunction apply_U(const GridFunction& f, int axis);

// Embedded-representation J2: -i d/dphi2 plus the multiplicative correction
// (i/2) rho sin(phi2) / (1 + rho cos phi2); equals V J2 V^(-1).
GridFunction apply_Jtilde2(const GridFunction& f, const EmbeddedTorusGeometry& geom);

// Half-open coordinate window [lo, lo + extent) per axis, wrapped mod 2 pi.
struct PhiWindow {
  double phi1_lo = 0.0;
  double phi2_lo = 0.0;
  double extent1 = 2.0 * std::numbers::pi;  // full circle by default
  double extent2 = 2.0 * std::numbers::pi;
};

// Windowed probability of the normalized state computed both ways: weighted
// integral of |V f|^2 and flat integral of |f|^2. The integrands agree
// pointwise, so the two values agree to rounding.
std::pair<double, double> density_invariance_check(const TorusState& s,
                                                   const EmbeddedTorusGeometry& geom,
                                                   const PhiWindow& window,
                                                   int n1 = 256, int n2 = 256);

// Sample the position wavefunction of a state on the grid; optionally
// normalized to unit norm.
GridFunction sample_state(const TorusState& s, int n1, int n2,
                          bool normalize = true);

}  // namespace tcs
