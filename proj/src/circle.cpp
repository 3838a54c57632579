#include "tcs/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
const complex tau_overlap(0.0, 1.0 / pi);  // modulus of all overlap-side series

constexpr int max_window_half_width = 2000;

void check_symmetric(const Sector1D& sector, const char* op) {
  if (!sector.time_reversal_symmetric()) {
    throw std::invalid_argument(std::string(op) +
                                ": sector requires j0 in {0, 1/2}; use the "
                                "quasiperiodic general-j0 operations instead");
  }
}

void check_sector(const Sector1D& sector) {
  if (!(sector.j0 >= 0.0 && sector.j0 < 1.0)) {
    throw std::invalid_argument("sector boundary label j0 must lie in [0,1)");
  }
}

ThetaKind overlap_kind(const Sector1D& sector) {
  return sector.j0 == 0.0 ? ThetaKind::theta3 : ThetaKind::theta2;
}

}  // namespace

PhasePoint1D::PhasePoint1D(double l, double alpha) : l_(l) {
  if (!std::isfinite(l) || !std::isfinite(alpha)) {
    throw std::invalid_argument("phase point labels must be finite");
  }
  alpha_ = alpha - two_pi * std::floor(alpha / two_pi);
  if (alpha_ >= two_pi) alpha_ = 0.0;
}

complex PhasePoint1D::z() const { return std::exp(complex(-l_, alpha_)); }

double StateVector1D::norm_sq() const {
  double sum = 0.0;
  for (const complex& c : coeffs) sum += std::norm(c);
  return sum;
}

complex amplitude1d(double j, const PhasePoint1D& p, const Sector1D& sector) {
  check_sector(sector);
  const double frac = j - sector.j0;
  if (std::abs(frac - std::round(frac)) > 1e-9) {
    throw std::invalid_argument(
        "amplitude1d: j does not lie on the sector lattice Z + j0");
  }
  return std::exp(complex(p.l() * j - 0.5 * j * j, -j * p.alpha()));
}

StateVector1D build_state1d(const PhasePoint1D& p, const Sector1D& sector,
                            double tail_eps) {
  check_sector(sector);
  if (!(tail_eps > 0.0)) {
    throw std::invalid_argument("build_state1d: tail_eps must be positive");
  }
  const double l = p.l();
  const double center = std::round(l - sector.j0) + sector.j0;
  // |c_j| relative to the on-lattice peak at `center`
  const double log_peak = l * center - 0.5 * center * center;
  const auto rel = [&](double j) {
    return std::exp(l * j - 0.5 * j * j - log_peak);
  };
  int w = 1;
  while (rel(center + w) >= tail_eps || rel(center - w) >= tail_eps) {
    if (++w > max_window_half_width) {
      throw std::runtime_error("build_state1d: window exceeds hard cap");
    }
  }
  StateVector1D s;
  s.sector = sector;
  s.center = center;
  s.half_width = w;
  s.coeffs.resize(2 * w + 1);
  double peak = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    s.coeffs[i] = amplitude1d(s.j(i), p, sector);
    peak = std::max(peak, std::abs(s.coeffs[i]));
  }
  s.tail_bound = tail_eps * peak;
  return s;
}

complex overlap1d(const PhasePoint1D& z, const PhasePoint1D& w,
                  const Sector1D& sector, Tolerance tol) {
  check_symmetric(sector, "overlap1d");
  // (l, alpha) parametrized form of the theta argument; no logarithms, so
  // no branch ambiguity for the antiperiodic theta2 case.
  const complex v((w.alpha() - z.alpha()) / two_pi, (z.l() + w.l()) / two_pi);
  return theta(overlap_kind(sector), {v, tau_overlap}, tol);
}

double expect_J1d(double l, const Sector1D& sector, Tolerance tol) {
  check_symmetric(sector, "expect_J1d");
  return theta_log_derivative(overlap_kind(sector), l, tol);
}

complex expect_U1d(const PhasePoint1D& p, const Sector1D& sector, Tolerance tol) {
  check_symmetric(sector, "expect_U1d");
  const complex v(0.0, p.l() / pi);
  const ThetaKind a = sector.j0 == 0.0 ? ThetaKind::theta2 : ThetaKind::theta3;
  const ThetaKind b = sector.j0 == 0.0 ? ThetaKind::theta3 : ThetaKind::theta2;
  const complex ratio = theta(a, {v, tau_overlap}, tol) / theta(b, {v, tau_overlap}, tol);
  return std::exp(-0.25) * std::exp(complex(0.0, p.alpha())) * ratio;
}

complex relative_expect_U1d(const PhasePoint1D& p, const Sector1D& sector,
                            Tolerance tol) {
  return expect_U1d(p, sector, tol) / expect_U1d(PhasePoint1D(0.0, 0.0), sector, tol);
}

double classical_error_law(double l) {
  return two_pi * std::exp(-pi * pi) * std::sin(two_pi * l);
}

StateVector1D apply_ladder1d(const StateVector1D& s, int step) {
  StateVector1D out = s;
  out.center = s.center + step;
  return out;
}

double z_eigen_residual1d(const StateVector1D& s, const PhasePoint1D& p) {
  const complex z = p.z();
  double num = 0.0;
  for (int i = 1; i < s.size(); ++i) {
    const double j = s.j(i);
    const complex shifted = s.coeffs[i - 1] * std::exp(-j + 0.5);
    num += std::norm(shifted - z * s.coeffs[i]);
  }
  return std::sqrt(num / s.norm_sq());
}

}  // namespace tcs
