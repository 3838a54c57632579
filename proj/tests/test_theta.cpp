#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcs/oracle.hpp"
#include "tcs/theta.hpp"
#include "test_helpers.hpp"

using namespace tcs;
using tcs_test::Rng;
using tcs_test::rel_err;

namespace {

constexpr double pi = std::numbers::pi;
const complex tau1(0.0, 1.0 / pi);     // q = e^{-1}
const complex tau2(0.0, 0.5 / pi);     // q = e^{-1/2}

// independent in-test oracle: plain direct summation, ascending order
complex direct_theta3(complex v, complex tau, int n_max = 60) {
  complex sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    sum += std::exp(complex(0.0, pi) * tau * double(n) * double(n) +
                    complex(0.0, 2.0 * pi) * v * double(n));
  }
  return sum;
}

complex direct_theta2(complex v, complex tau, int n_max = 60) {
  complex sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    const double x = n - 0.5;
    sum += std::exp(complex(0.0, pi) * tau * x * x +
                    complex(0.0, pi) * v * (2.0 * n - 1.0));
  }
  return sum;
}

}  // namespace

TEST_CASE("theta3 at v=0, tau=i/pi equals the lattice Gaussian sum") {
  // oracle: sum e^{-n^2} over Z = 1.7726372048266522
  const complex oracle = direct_theta3(0.0, tau1);
  CHECK(oracle.real() == doctest::Approx(1.7726372048266522).epsilon(1e-14));
  const complex value = theta3({0.0, tau1});
  CHECK(std::abs(value - oracle) < 1e-13);
  CHECK(std::abs(value.imag()) < 1e-15);
}

TEST_CASE("theta3 at v=1/2 is the alternating sum") {
  // oracle: sum (-1)^n e^{-n^2} = 0.3006258008689844
  const complex oracle = direct_theta3(0.5, tau1);
  CHECK(oracle.real() == doctest::Approx(0.3006258008689844).epsilon(1e-13));
  CHECK(std::abs(theta3({0.5, tau1}) - oracle) < 1e-13);
}

TEST_CASE("theta2 at v=0, tau=i/pi") {
  // oracle: 2 sum_{m>=0} e^{-(m+1/2)^2} = 1.7722704969843800
  const complex oracle = direct_theta2(0.0, tau1);
  CHECK(oracle.real() == doctest::Approx(1.7722704969843800).epsilon(1e-14));
  CHECK(std::abs(theta2({0.0, tau1}) - oracle) < 1e-13);
}

TEST_CASE("theta2 vanishes at v=1/2: terms pair antisymmetrically") {
  CHECK(std::abs(theta2({0.5, tau1})) < 1e-14);
}

TEST_CASE("theta periodicity and evenness over random arguments") {
  // |Im v| kept small so the values stay O(1) and the absolute 2 eps target
  // is meaningful
  Rng rng(1234);
  for (int i = 0; i < 100; ++i) {
    const complex v = rng.box(2.0, 0.2);
    const complex tau = (i % 2 == 0) ? tau1 : tau2;
    CHECK(std::abs(theta3({v + 1.0, tau}) - theta3({v, tau})) < 2e-14);
    CHECK(std::abs(theta2({v + 1.0, tau}) + theta2({v, tau})) < 2e-14);
    CHECK(std::abs(theta3({-v, tau}) - theta3({v, tau})) < 2e-14);
    CHECK(std::abs(theta2({-v, tau}) - theta2({v, tau})) < 2e-14);
  }
}

TEST_CASE("certified engine agrees with the wide fixed-window oracle") {
  Rng rng(99);
  const complex taus[3] = {tau1, tau2, complex(0.1, 0.5)};
  for (int i = 0; i < 100; ++i) {
    const complex v = rng.box(2.0, 2.0);
    const complex tau = taus[i % 3];
    CHECK(rel_err(theta3({v, tau}), oracle::theta3_wide(v, tau)) < 1e-12);
    CHECK(rel_err(theta2({v, tau}), oracle::theta2_wide(v, tau)) < 1e-12);
  }
}

TEST_CASE("doubling the certified half-width moves the value less than eps") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const complex v = rng.box(2.0, 2.0);
    const complex tau = (i % 2 == 0) ? tau1 : complex(0.1, 0.5);
    for (double offset : {0.0, 0.5}) {
      const int n = detail::certified_half_width(
          -pi * tau.imag(), 2.0 * pi * std::abs(v.imag()), 1e-14, offset, false);
      const complex a = detail::lattice_theta_sum(offset, v, tau, n);
      const complex b = detail::lattice_theta_sum(offset, v, tau, 2 * n);
      CHECK(std::abs(a - b) < 1e-14);
    }
  }
}

TEST_CASE("log-derivative values") {
  CHECK(theta_log_derivative(ThetaKind::theta3, 0.0) == 0.0);
  // oracle: sum n e^{2nl-n^2} / sum e^{2nl-n^2} at l=0.25 = 0.2496750136364037
  CHECK(theta_log_derivative(ThetaKind::theta3, 0.25) ==
        doctest::Approx(0.2496750136364037).epsilon(1e-12));
  // exact at lattice momenta
  CHECK(std::abs(theta_log_derivative(ThetaKind::theta3, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(theta_log_derivative(ThetaKind::theta2, 1.5) - 1.5) < 1e-12);
  // matches a direct ratio at a generic point
  double num = 0.0, den = 0.0;
  const double l = 0.8125;
  for (int n = -40; n <= 40; ++n) {
    const double t = std::exp(2.0 * n * l - double(n) * n);
    num += n * t;
    den += t;
  }
  CHECK(theta_log_derivative(ThetaKind::theta3, l) ==
        doctest::Approx(num / den).epsilon(1e-13));
}

TEST_CASE("half-period shift identity") {
  CHECK(half_period_shift_residual(ThetaKind::theta3, 0.0, tau1) < 1e-12);
  CHECK(half_period_shift_residual(ThetaKind::theta2, 0.0, tau1) < 1e-12);
  CHECK(half_period_shift_residual(ThetaKind::theta3, complex(0.3, 0.1), tau1) <
        1e-12);
  CHECK(half_period_shift_residual(ThetaKind::theta3, 0.7, tau2) < 1e-12);
  CHECK(half_period_shift_residual(ThetaKind::theta2, 0.7, tau2) < 1e-12);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(theta3({0.0, complex(0.0, -1.0)}), std::domain_error);
  CHECK_THROWS_AS(theta3({0.0, complex(1.0, 0.0)}), std::domain_error);
  CHECK_THROWS_AS(theta3({0.0, tau1}, Tolerance{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(theta3({0.0, tau1}, Tolerance{1e-3}), std::invalid_argument);
  // huge |Im v| with a slowly converging modulus exceeds the hard cap
  CHECK_THROWS_AS(theta3({complex(0.0, 1e6), complex(0.0, 1e-4)}),
                  std::runtime_error);
}

TEST_CASE("theta3 fault-injection hook shifts the value and resets") {
  const complex base = theta3({0.25, tau1});
  set_theta3_perturbation(1e-6);
  const complex shifted = theta3({0.25, tau1});
  set_theta3_perturbation(0.0);
  CHECK(std::abs(shifted - base - complex(1e-6, 0.0)) < 1e-15);
  CHECK(theta3({0.25, tau1}) == base);
}
