#include "tcs/quasiperiodic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
const complex tau_overlap(0.0, 1.0 / pi);
const complex tau_position(0.0, 1.0 / two_pi);

}  // namespace

std::array<double, 2> normalize_j0(std::array<double, 2> j0) {
  for (double& x : j0) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("j0 components must be finite");
    }
    x -= std::floor(x);
    if (x >= 1.0) x = 0.0;
  }
  return j0;
}

complex overlap_general(const TorusPhasePoint& z, const TorusPhasePoint& w,
                        std::array<double, 2> j0, Tolerance tol) {
  j0 = normalize_j0(j0);
  complex result = 1.0;
  for (int k = 0; k < 2; ++k) {
    const double lsum = z.l(k) + w.l(k);
    const double dalpha = z.alpha(k) - w.alpha(k);
    const complex prefactor =
        std::exp(complex(lsum * j0[k] - j0[k] * j0[k], dalpha * j0[k]));
    const complex u(dalpha / two_pi, -(lsum - 2.0 * j0[k]) / two_pi);
    result *= prefactor * theta3({u, tau_overlap}, tol);
  }
  return result;
}

complex overlap_general_zform(const TorusPhasePoint& z, const TorusPhasePoint& w,
                              std::array<double, 2> j0, Tolerance tol) {
  j0 = normalize_j0(j0);
  complex result = 1.0;
  for (int k = 0; k < 2; ++k) {
    const complex g = std::log(std::conj(z.axis[k].z()) * w.axis[k].z());
    const complex prefactor = std::exp(-j0[k] * g - j0[k] * j0[k]);
    const complex u = complex(0.0, 1.0 / two_pi) * (g + 2.0 * j0[k]);
    result *= prefactor * theta3({u, tau_overlap}, tol);
  }
  return result;
}

std::array<double, 2> expect_J_general(std::array<double, 2> l,
                                       std::array<double, 2> j0, Tolerance tol) {
  j0 = normalize_j0(j0);
  return {j0[0] + theta_log_derivative(ThetaKind::theta3, l[0] - j0[0], tol),
          j0[1] + theta_log_derivative(ThetaKind::theta3, l[1] - j0[1], tol)};
}

std::array<complex, 2> expect_U_general(const TorusPhasePoint& p,
                                        std::array<double, 2> j0, Tolerance tol) {
  j0 = normalize_j0(j0);
  std::array<complex, 2> out;
  for (int k = 0; k < 2; ++k) {
    const complex v(0.0, (p.l(k) - j0[k]) / pi);
    const complex ratio =
        theta2({v, tau_overlap}, tol) / theta3({v, tau_overlap}, tol);
    out[k] = std::exp(-0.25) * std::exp(complex(0.0, p.alpha(k))) * ratio;
  }
  return out;
}

std::array<complex, 2> relative_expect_U_general(const TorusPhasePoint& p,
                                                 std::array<double, 2> j0,
                                                 Tolerance tol) {
  const auto num = expect_U_general(p, j0, tol);
  const auto den = expect_U_general(TorusPhasePoint(0.0, 0.0, 0.0, 0.0), j0, tol);
  return {num[0] / den[0], num[1] / den[1]};
}

complex wavefunction_general(const TorusPhasePoint& p, double phi1, double phi2,
                             std::array<double, 2> j0, Tolerance tol) {
  j0 = normalize_j0(j0);
  complex value = 1.0;
  for (int k = 0; k < 2; ++k) {
    const double phi = k == 0 ? phi1 : phi2;
    const double x = phi - p.alpha(k);
    const complex prefactor =
        std::exp(complex(j0[k] * p.l(k) - 0.5 * j0[k] * j0[k], j0[k] * x));
    const complex u(x / two_pi, -(p.l(k) - j0[k]) / two_pi);
    value *= prefactor * theta3({u, tau_position}, tol);
  }
  return value;
}

DensityGrid density_general(const TorusPhasePoint& p, std::array<double, 2> j0,
                            int n1, int n2, Tolerance tol) {
  j0 = normalize_j0(j0);
  return detail::eval_density(p, {ThetaKind::theta3, ThetaKind::theta3},
                              {p.l(0) - j0[0], p.l(1) - j0[1]}, n1, n2, true, tol);
}

DensityGrid density_general_serial(const TorusPhasePoint& p,
                                   std::array<double, 2> j0, int n1, int n2,
                                   Tolerance tol) {
  j0 = normalize_j0(j0);
  return detail::eval_density(p, {ThetaKind::theta3, ThetaKind::theta3},
                              {p.l(0) - j0[0], p.l(1) - j0[1]}, n1, n2, false, tol);
}

}  // namespace tcs
