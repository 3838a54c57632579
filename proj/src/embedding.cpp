#include "tcs/embedding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcs {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

void check_shapes(const GridFunction& f, const GridFunction& g) {
  if (f.n1 != g.n1 || f.n2 != g.n2) {
    throw std::invalid_argument("grid functions have mismatched shapes");
  }
}

double weight(const EmbeddedTorusGeometry& geom, double phi2) {
  return 1.0 + geom.rho() * std::cos(phi2);
}

// Spectral action of -i d/dphi along one axis of the grid: project on the
// integer Fourier modes, multiply by the mode number, resynthesize. The
// Nyquist mode (even n) is dropped. O(n^2) per line, which is plenty at
// test-scale grids.
GridFunction apply_J_axis(const GridFunction& f, int axis) {
  const int n = axis == 0 ? f.n1 : f.n2;
  const int lines = axis == 0 ? f.n2 : f.n1;
  const int stride = axis == 0 ? f.n2 : 1;

  std::vector<complex> roots(n);
  for (int m = 0; m < n; ++m) {
    roots[m] = std::exp(complex(0.0, two_pi * m / n));
  }

  GridFunction out(f.n1, f.n2);
#pragma omp parallel for schedule(static)
  for (int line = 0; line < lines; ++line) {
    const complex* in = f.values.data() + (axis == 0 ? line : size_t(line) * f.n2);
    complex* res = out.values.data() + (axis == 0 ? line : size_t(line) * f.n2);
    std::vector<complex> modes(n);
    for (int k = 0; k < n; ++k) {
      const int freq = k <= (n - 1) / 2 ? k : k - n;
      if (2 * std::abs(freq) == n) {
        modes[k] = 0.0;  // Nyquist dropped
        continue;
      }
      complex c = 0.0;
      for (int m = 0; m < n; ++m) {
        c += in[size_t(m) * stride] * std::conj(roots[(size_t(k) * m) % n]);
      }
      modes[k] = c * (double(freq) / n);
    }
    for (int m = 0; m < n; ++m) {
      complex v = 0.0;
      for (int k = 0; k < n; ++k) {
        v += modes[k] * roots[(size_t(k) * m) % n];
      }
      res[size_t(m) * stride] = v;
    }
  }
  return out;
}

}  // namespace

EmbeddedTorusGeometry::EmbeddedTorusGeometry(double R, double r)
    : outer_radius(R), inner_radius(r) {
  if (!(R > 0.0) || !(r >= 0.0)) {
    throw std::invalid_argument("torus radii must satisfy R > 0, r >= 0");
  }
  if (!(r / R < 1.0)) {
    throw std::invalid_argument(
        "embedded torus requires rho = r/R < 1 so the measure weight stays "
        "positive");
  }
}

complex inner_flat(const GridFunction& f, const GridFunction& g) {
  check_shapes(f, g);
  complex sum = 0.0;
  for (size_t i = 0; i < f.values.size(); ++i) {
    sum += std::conj(f.values[i]) * g.values[i];
  }
  return sum / double(f.values.size());
}

complex inner_embedded(const GridFunction& f, const GridFunction& g,
                       const EmbeddedTorusGeometry& geom) {
  check_shapes(f, g);
  complex sum = 0.0;
  for (int m1 = 0; m1 < f.n1; ++m1) {
    for (int m2 = 0; m2 < f.n2; ++m2) {
      const double w = weight(geom, two_pi * m2 / f.n2);
      sum += w * std::conj(f.at(m1, m2)) * g.at(m1, m2);
    }
  }
  return sum / double(f.values.size());
}

GridFunction map_V(const GridFunction& f, const EmbeddedTorusGeometry& geom) {
  GridFunction out(f.n1, f.n2);
  for (int m2 = 0; m2 < f.n2; ++m2) {
    const double s = 1.0 / std::sqrt(weight(geom, two_pi * m2 / f.n2));
    for (int m1 = 0; m1 < f.n1; ++m1) out.at(m1, m2) = f.at(m1, m2) * s;
  }
  return out;
}

GridFunction map_V_inverse(const GridFunction& f, const EmbeddedTorusGeometry& geom) {
  GridFunction out(f.n1, f.n2);
  for (int m2 = 0; m2 < f.n2; ++m2) {
    const double s = std::sqrt(weight(geom, two_pi * m2 / f.n2));
    for (int m1 = 0; m1 < f.n1; ++m1) out.at(m1, m2) = f.at(m1, m2) * s;
  }
  return out;
}

GridFunction apply_J1(const GridFunction& f) { return apply_J_axis(f, 0); }
GridFunction apply_J2(const GridFunction& f) { return apply_J_axis(f, 1); }

GridFunction apply_U(const GridFunction& f, int axis) {
  GridFunction out(f.n1, f.n2);
  for (int m1 = 0; m1 < f.n1; ++m1) {
    for (int m2 = 0; m2 < f.n2; ++m2) {
      const double phi = axis == 0 ? two_pi * m1 / f.n1 : two_pi * m2 / f.n2;
      out.at(m1, m2) = f.at(m1, m2) * std::exp(complex(0.0, phi));
    }
  }
  return out;
}

GridFunction apply_Jtilde2(const GridFunction& f, const EmbeddedTorusGeometry& geom) {
  GridFunction out = apply_J2(f);
  const double rho = geom.rho();
  for (int m2 = 0; m2 < f.n2; ++m2) {
    const double phi2 = two_pi * m2 / f.n2;
    const complex corr(0.0, 0.5 * rho * std::sin(phi2) / weight(geom, phi2));
    for (int m1 = 0; m1 < f.n1; ++m1) {
      out.at(m1, m2) += corr * f.at(m1, m2);
    }
  }
  return out;
}

std::pair<double, double> density_invariance_check(const TorusState& s,
                                                   const EmbeddedTorusGeometry& geom,
                                                   const PhiWindow& window, int n1,
                                                   int n2) {
  if (!(window.extent1 >= 0.0 && window.extent2 >= 0.0)) {
    throw std::invalid_argument("window extents must be nonnegative");
  }
  const GridFunction f = sample_state(s, n1, n2, /*normalize=*/true);
  const GridFunction ft = map_V(f, geom);

  const auto in_window = [](double phi, double lo, double extent) {
    double d = std::fmod(phi - lo, two_pi);
    if (d < 0.0) d += two_pi;
    return d < extent;
  };

  double p_embedded = 0.0;
  double p_flat = 0.0;
  for (int m1 = 0; m1 < n1; ++m1) {
    const double phi1 = two_pi * m1 / n1;
    if (!in_window(phi1, window.phi1_lo, window.extent1)) continue;
    for (int m2 = 0; m2 < n2; ++m2) {
      const double phi2 = two_pi * m2 / n2;
      if (!in_window(phi2, window.phi2_lo, window.extent2)) continue;
      p_embedded += weight(geom, phi2) * std::norm(ft.at(m1, m2));
      p_flat += std::norm(f.at(m1, m2));
    }
  }
  const double cell = 1.0 / (double(n1) * n2);
  return {p_embedded * cell, p_flat * cell};
}

GridFunction sample_state(const TorusState& s, int n1, int n2, bool normalize) {
  const int w1 = s.size(0), w2 = s.size(1);
  // Stage 1: contract the fast axis against its phase factors.
  std::vector<complex> partial(size_t(w1) * n2);
  for (int i1 = 0; i1 < w1; ++i1) {
    for (int m2 = 0; m2 < n2; ++m2) {
      complex acc = 0.0;
      const double phi2 = two_pi * m2 / n2;
      for (int i2 = 0; i2 < w2; ++i2) {
        acc += s.coeff(i1, i2) * std::exp(complex(0.0, s.j(1, i2) * phi2));
      }
      partial[size_t(i1) * n2 + m2] = acc;
    }
  }
  GridFunction out(n1, n2);
  const double scale = normalize ? 1.0 / std::sqrt(s.norm_sq()) : 1.0;
#pragma omp parallel for schedule(static)
  for (int m1 = 0; m1 < n1; ++m1) {
    const double phi1 = two_pi * m1 / n1;
    for (int m2 = 0; m2 < n2; ++m2) {
      complex acc = 0.0;
      for (int i1 = 0; i1 < w1; ++i1) {
        acc += partial[size_t(i1) * n2 + m2] *
               std::exp(complex(0.0, s.j(0, i1) * phi1));
      }
      out.at(m1, m2) = acc * scale;
    }
  }
  return out;
}

}  // namespace tcs
