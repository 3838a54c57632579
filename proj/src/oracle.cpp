#include "tcs/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs::oracle {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Coefficient of |j> in the coherent state at (l, alpha), written out here
// so the oracle stays independent of the library amplitude path.
complex coeff(double j1, double j2, const TorusPhasePoint& p) {
  const double re = p.l(0) * j1 + p.l(1) * j2 - 0.5 * (j1 * j1 + j2 * j2);
  const double im = -(p.alpha(0) * j1 + p.alpha(1) * j2);
  return std::exp(complex(re, im));
}

complex coeff1d(double j, const PhasePoint1D& p) {
  return std::exp(complex(p.l() * j - 0.5 * j * j, -j * p.alpha()));
}

struct ComplexSum {
  NeumaierSum re, im;
  void add(complex x) {
    re.add(x.real());
    im.add(x.imag());
  }
  complex value() const { return {re.value(), im.value()}; }
};

void check_window(const OracleConfig& cfg, double max_abs_l) {
  if (cfg.half_width < 4.0 * (1.0 + max_abs_l)) {
    throw std::invalid_argument(
        "oracle window half-width must be at least 4 (1 + max |l|)");
  }
}

double max_abs_l(const TorusPhasePoint& p) {
  return std::max(std::abs(p.l(0)), std::abs(p.l(1)));
}

}  // namespace

void NeumaierSum::add(double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    compensation += (sum - t) + x;
  } else {
    compensation += (x - t) + sum;
  }
  sum = t;
}

complex overlap(const TorusPhasePoint& z, const TorusPhasePoint& w,
                const TorusSector& sector, const OracleConfig& cfg) {
  check_window(cfg, std::max(max_abs_l(z), max_abs_l(w)));
  ComplexSum acc;
  for (int n1 = -cfg.half_width; n1 <= cfg.half_width; ++n1) {
    for (int n2 = -cfg.half_width; n2 <= cfg.half_width; ++n2) {
      const double j1 = n1 + sector.axis[0].j0;
      const double j2 = n2 + sector.axis[1].j0;
      acc.add(std::conj(coeff(j1, j2, z)) * coeff(j1, j2, w));
    }
  }
  return acc.value();
}

complex expectation(Observable op, const TorusPhasePoint& p,
                    const TorusSector& sector, const OracleConfig& cfg) {
  check_window(cfg, max_abs_l(p));
  int shift1 = 0, shift2 = 0, pow1 = 0, pow2 = 0;
  switch (op) {
    case Observable::J1: pow1 = 1; break;
    case Observable::J2: pow2 = 1; break;
    case Observable::J1J1: pow1 = 2; break;
    case Observable::J2J2: pow2 = 2; break;
    case Observable::J1J2: pow1 = pow2 = 1; break;
    case Observable::U1: shift1 = 1; break;
    case Observable::U2: shift2 = 1; break;
    case Observable::U1U1: shift1 = 2; break;
    case Observable::U2U2: shift2 = 2; break;
    case Observable::U1U2: shift1 = shift2 = 1; break;
    default: throw std::invalid_argument("unknown oracle observable");
  }
  ComplexSum num;
  NeumaierSum den;
  for (int n1 = -cfg.half_width; n1 <= cfg.half_width; ++n1) {
    for (int n2 = -cfg.half_width; n2 <= cfg.half_width; ++n2) {
      const double j1 = n1 + sector.axis[0].j0;
      const double j2 = n2 + sector.axis[1].j0;
      const complex c = coeff(j1, j2, p);
      den.add(std::norm(c));
      double w = 1.0;
      for (int a = 0; a < pow1; ++a) w *= j1;
      for (int a = 0; a < pow2; ++a) w *= j2;
      num.add(std::conj(coeff(j1 + shift1, j2 + shift2, p)) * c * w);
    }
  }
  return num.value() / den.value();
}

complex wavefunction(const TorusState& s, double phi1, double phi2) {
  ComplexSum acc;
  for (int i1 = 0; i1 < s.size(0); ++i1) {
    for (int i2 = 0; i2 < s.size(1); ++i2) {
      const double arg = s.j(0, i1) * phi1 + s.j(1, i2) * phi2;
      acc.add(s.coeff(i1, i2) * std::exp(complex(0.0, arg)));
    }
  }
  return acc.value();
}

double density_mean(const TorusState& s, int n1, int n2) {
  const int w1 = s.size(0), w2 = s.size(1);
  NeumaierSum norm;
  for (const complex& c : s.coeffs) norm.add(std::norm(c));
  const double norm_sq = norm.value();

  // Contract the fast axis first; this is still the direct summation of the
  // defining series, just factored over the product grid.
  std::vector<complex> partial(size_t(w1) * n2);
  for (int i1 = 0; i1 < w1; ++i1) {
    for (int m2 = 0; m2 < n2; ++m2) {
      const double phi2 = two_pi * m2 / n2;
      ComplexSum acc;
      for (int i2 = 0; i2 < w2; ++i2) {
        acc.add(s.coeff(i1, i2) * std::exp(complex(0.0, s.j(1, i2) * phi2)));
      }
      partial[size_t(i1) * n2 + m2] = acc.value();
    }
  }

  std::vector<double> row_sum(n1, 0.0);
#pragma omp parallel for schedule(static)
  for (int m1 = 0; m1 < n1; ++m1) {
    const double phi1 = two_pi * m1 / n1;
    NeumaierSum row;
    for (int m2 = 0; m2 < n2; ++m2) {
      ComplexSum acc;
      for (int i1 = 0; i1 < w1; ++i1) {
        acc.add(partial[size_t(i1) * n2 + m2] *
                std::exp(complex(0.0, s.j(0, i1) * phi1)));
      }
      row.add(std::norm(acc.value()));
    }
    row_sum[m1] = row.value();
  }
  NeumaierSum total;
  for (double r : row_sum) total.add(r);
  return total.value() / (double(n1) * n2) / norm_sq;
}

double density_norm(const TorusPhasePoint& p, const TorusSector& sector,
                    const OracleConfig& cfg) {
  check_window(cfg, max_abs_l(p));
  // Fixed window; relative tails beyond half-width 24 are below the double
  // underflow threshold, so widening further only adds zeros.
  const int w = std::min(cfg.half_width, 24);
  TorusState s;
  s.sector = sector;
  for (int k = 0; k < 2; ++k) {
    s.center[k] = std::round(p.l(k) - sector.axis[k].j0) + sector.axis[k].j0;
    s.half_width[k] = w;
  }
  s.coeffs.resize(size_t(s.size(0)) * s.size(1));
  for (int i1 = 0; i1 < s.size(0); ++i1) {
    for (int i2 = 0; i2 < s.size(1); ++i2) {
      s.coeff(i1, i2) = coeff(s.j(0, i1), s.j(1, i2), p);
    }
  }
  return density_mean(s, cfg.quad_n1, cfg.quad_n2);
}

complex theta3_wide(complex v, complex tau, int half_width) {
  const complex quad = complex(0.0, pi) * tau;
  const complex lin = complex(0.0, two_pi) * v;
  ComplexSum acc;
  for (int n = -half_width; n <= half_width; ++n) {
    acc.add(std::exp(quad * (double(n) * n) + lin * double(n)));
  }
  return acc.value();
}

complex theta2_wide(complex v, complex tau, int half_width) {
  const complex quad = complex(0.0, pi) * tau;
  const complex lin = complex(0.0, pi) * v;
  ComplexSum acc;
  for (int n = -half_width; n <= half_width; ++n) {
    const double x = n - 0.5;
    acc.add(std::exp(quad * (x * x) + lin * (2.0 * n - 1.0)));
  }
  return acc.value();
}

complex overlap1d_sum(const PhasePoint1D& z, const PhasePoint1D& w, double j0,
                      int half_width) {
  ComplexSum acc;
  for (int n = -half_width; n <= half_width; ++n) {
    const double j = n + j0;
    acc.add(std::conj(coeff1d(j, z)) * coeff1d(j, w));
  }
  return acc.value();
}

double expect_J1d_sum(double l, double j0, int half_width) {
  NeumaierSum num, den;
  for (int n = -half_width; n <= half_width; ++n) {
    const double j = n + j0;
    const double t = std::exp(2.0 * l * j - j * j);
    num.add(j * t);
    den.add(t);
  }
  return num.value() / den.value();
}

complex expect_U1d_sum(const PhasePoint1D& p, double j0, int half_width) {
  ComplexSum num;
  NeumaierSum den;
  for (int n = -half_width; n <= half_width; ++n) {
    const double j = n + j0;
    const complex c = coeff1d(j, p);
    den.add(std::norm(c));
    num.add(std::conj(coeff1d(j + 1.0, p)) * c);
  }
  return num.value() / den.value();
}

}  // namespace tcs::oracle
