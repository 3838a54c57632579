#include "tcs/theta.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;

std::atomic<double> g_theta3_perturbation{0.0};

void check_tolerance(Tolerance tol) {
  if (!(tol.eps > 0.0 && tol.eps <= 1e-6)) {
    throw std::invalid_argument("theta tolerance eps must lie in (0, 1e-6]");
  }
}

void check_modulus(complex tau) {
  if (!(tau.imag() > 0.0)) {
    throw std::domain_error("theta modulus requires Im(tau) > 0");
  }
}

}  // namespace

namespace detail {

int certified_half_width(double log_a, double log_b, double eps, double offset,
                         bool weighted) {
  // Term magnitudes are majorized by t(x) = exp(log_a x^2 + log_b x) with
  // log_a < 0. Past the peak the step ratio t(x+1)/t(x) = exp((2x+1) log_a
  // + log_b) falls below 1 and the tail is geometric.
  for (int n = 1; n <= theta_series_hard_cap; ++n) {
    const double x = n - offset;
    const double log_r = (2.0 * x + 1.0) * log_a + log_b;
    if (log_r >= 0.0) continue;
    const double r = std::exp(log_r);
    const double t = std::exp(log_a * x * x + log_b * x);
    double bound = 2.0 * t / (1.0 - r);
    if (weighted) bound *= (x + 2.0) / (1.0 - r);
    if (bound < eps) return n;
  }
  throw std::runtime_error(
      "theta series: certified truncation width exceeds hard cap "
      "(pathological argument)");
}

complex lattice_theta_sum(double offset, complex v, complex tau, int half_width) {
  const complex quad = complex(0.0, pi) * tau;      // exponent of q^(x^2)
  const complex lin = complex(0.0, 2.0 * pi) * v;   // exponent of e^(2 pi i x v)
  complex sum = 0.0;
  for (int n = half_width; n >= 1; --n) {
    const double x = n - offset;
    const complex sq = quad * (x * x);
    sum += std::exp(sq + lin * x) + std::exp(sq - lin * x);
  }
  if (offset == 0.0) sum += 1.0;  // unpaired x = 0 term
  return sum;
}

}  // namespace detail

static complex theta_impl(double offset, const ThetaArgument& arg, Tolerance tol) {
  check_tolerance(tol);
  check_modulus(arg.tau);
  const double log_a = -pi * arg.tau.imag();
  const double log_b = 2.0 * pi * std::abs(arg.v.imag());
  const int n = detail::certified_half_width(log_a, log_b, tol.eps, offset, false);
  return detail::lattice_theta_sum(offset, arg.v, arg.tau, n);
}

complex theta3(const ThetaArgument& arg, Tolerance tol) {
  complex value = theta_impl(0.0, arg, tol);
  const double delta = g_theta3_perturbation.load(std::memory_order_relaxed);
  if (delta != 0.0) value += delta;
  return value;
}

complex theta2(const ThetaArgument& arg, Tolerance tol) {
  return theta_impl(0.5, arg, tol);
}

complex theta(ThetaKind kind, const ThetaArgument& arg, Tolerance tol) {
  return kind == ThetaKind::theta3 ? theta3(arg, tol) : theta2(arg, tol);
}

double theta_log_derivative(ThetaKind kind, double l, Tolerance tol) {
  check_tolerance(tol);
  const double offset = (kind == ThetaKind::theta3) ? 0.0 : 0.5;
  // Recenter on the lattice point nearest l; the common factor
  // e^(2 l c - c^2) cancels in the ratio, leaving bounded terms.
  const double center = std::round(l - offset) + offset;
  const double delta = l - center;
  const int n =
      detail::certified_half_width(-1.0, 2.0 * std::abs(delta), tol.eps, 0.0, true);
  double num = 0.0;
  double den = 0.0;
  for (int m = n; m >= 1; --m) {
    const double up = std::exp(2.0 * m * delta - double(m) * m);
    const double dn = std::exp(-2.0 * m * delta - double(m) * m);
    num += m * (up - dn);
    den += up + dn;
  }
  den += 1.0;
  return center + num / den;
}

double half_period_shift_residual(ThetaKind kind, complex v, complex tau,
                                  Tolerance tol) {
  const ThetaKind other =
      (kind == ThetaKind::theta3) ? ThetaKind::theta2 : ThetaKind::theta3;
  const complex lhs = theta(kind, {v + tau / 2.0, tau}, tol);
  const complex phase = std::exp(complex(0.0, -pi) * (tau / 4.0 + v));
  const complex rhs = phase * theta(other, {v, tau}, tol);
  return std::abs(lhs - rhs);
}

void set_theta3_perturbation(double delta) {
  g_theta3_perturbation.store(delta, std::memory_order_relaxed);
}

double theta3_perturbation() {
  return g_theta3_perturbation.load(std::memory_order_relaxed);
}

}  // namespace tcs
