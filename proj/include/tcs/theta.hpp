#pragma once
// Jacobi theta functions theta2 and theta3 for complex argument v and
// modulus tau (Im tau > 0), with a certified truncation bound:
//
//   theta3(v|tau) = sum_{n in Z}  q^(n^2)       e^(2 pi i n v)
//   theta2(v|tau) = sum_{n in Z}  q^((n-1/2)^2) e^(i pi v (2n-1))
//
// where q = e^(i pi tau). Both are lattice Gaussian sums, over Z for theta3
// and over Z + 1/2 for theta2. Terms are paired (x, -x) and accumulated from
// the largest |x| inward, so results are reproducible bit-for-bit.

#include <complex>

namespace tcs {

using complex = std::complex<double>;

struct ThetaArgument {
  complex v;    // dimensionless theta argument
  complex tau;  // modulus; series converges iff Im(tau) > 0
};

// Absolute bound on the series truncation remainder. Requests sloppier than
// 1e-6 are rejected.
struct Tolerance {
  double eps = 1e-14;
};

enum class ThetaKind { theta2 = 2, theta3 = 3 };

// Truncation half-widths beyond this signal a pathological argument and
// raise instead of degrading silently.
inline constexpr int theta_series_hard_cap = 10000;

complex theta3(const ThetaArgument& arg, Tolerance tol = {});
complex theta2(const ThetaArgument& arg, Tolerance tol = {});
complex theta(ThetaKind kind, const ThetaArgument& arg, Tolerance tol = {});

// (1 / (2 theta_kind)) d/dl theta_kind(i l / pi | i / pi): the mean lattice
// site of the Gaussian weight e^(2 l x - x^2) over Z (theta3) or Z + 1/2
// (theta2). Equals l exactly when l lies on the lattice; the series is
// recentered on the lattice point nearest l, so the result never overflows.
double theta_log_derivative(ThetaKind kind, double l, Tolerance tol = {});

// Residual |theta_{3(2)}(v + tau/2 | tau) - e^(-i pi (tau/4 + v)) theta_{2(3)}(v | tau)|.
// `kind` selects which theta appears on the shifted side. Zero in exact
// arithmetic; used as a self-test primitive.
double half_period_shift_residual(ThetaKind kind, complex v, complex tau,
                                  Tolerance tol = {});

// Fault-injection hook: additively perturbs every theta3 result. Only the
// verify subcommand's sensitivity check should ever set this nonzero.
void set_theta3_perturbation(double delta);
double theta3_perturbation();

namespace detail {

// Smallest pair count N such that the geometric majorant of the dropped tail
// of sum_{|x| > x_N} exp(log_a x^2 + log_b x), x on Z + offset, stays below
// eps. `weighted` additionally covers a |x| factor per term (derivative
// series). Throws when the hard cap is exceeded.
int certified_half_width(double log_a, double log_b, double eps, double offset,
                         bool weighted);

// Plain fixed-width symmetric sum over x in (Z + offset), |pair index| <= N.
// Exposed so the tail-certification property test can force wider windows.
complex lattice_theta_sum(double offset, complex v, complex tau, int half_width);

}  // namespace detail

}  // namespace tcs
