#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcs/embedding.hpp"
#include "test_helpers.hpp"

using namespace tcs;
using tcs_test::Rng;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

GridFunction constant(int n1, int n2, complex value) {
  GridFunction f(n1, n2);
  for (auto& v : f.values) v = value;
  return f;
}

GridFunction mode(int n1, int n2, int k1, int k2) {
  GridFunction f(n1, n2);
  for (int m1 = 0; m1 < n1; ++m1) {
    for (int m2 = 0; m2 < n2; ++m2) {
      f.at(m1, m2) = std::exp(
          complex(0.0, k1 * (two_pi * m1 / n1) + k2 * (two_pi * m2 / n2)));
    }
  }
  return f;
}

TorusState random_mode_state(Rng& rng, int half_width) {
  TorusState s;
  s.sector = make_sector(0.0, 0.0);
  s.center = {0.0, 0.0};
  s.half_width = {half_width, half_width};
  s.coeffs.resize(size_t(s.size(0)) * s.size(1));
  for (complex& c : s.coeffs) c = rng.box(1.0, 1.0);
  return s;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  double worst = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) {
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]));
  }
  return worst;
}
}  // namespace

TEST_CASE("geometry validation") {
  CHECK(EmbeddedTorusGeometry(2.0, 1.0).rho() == doctest::Approx(0.5));
  CHECK_THROWS_AS(EmbeddedTorusGeometry(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EmbeddedTorusGeometry(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(EmbeddedTorusGeometry(-1.0, 0.1), std::invalid_argument);
}

TEST_CASE("inner_flat: orthonormal Fourier modes") {
  const int n = 32;
  CHECK(std::abs(inner_flat(constant(n, n, 1.0), constant(n, n, 1.0)) -
                 complex(1.0)) < 1e-14);
  CHECK(std::abs(inner_flat(mode(n, n, 1, 2), mode(n, n, 1, 2)) - complex(1.0)) <
        1e-13);
  CHECK(std::abs(inner_flat(mode(n, n, 1, 2), mode(n, n, -1, 3))) < 1e-12);
  GridFunction wrong(n, 2 * n);
  CHECK_THROWS_AS(inner_flat(constant(n, n, 1.0), wrong), std::invalid_argument);
}

TEST_CASE("inner_embedded: weight integrates away against constants") {
  const int n = 32;
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  CHECK(std::abs(inner_embedded(constant(n, n, 1.0), constant(n, n, 1.0), geom) -
                 complex(1.0)) < 1e-13);
  // |e^{i phi2}|^2 = 1, so the cos term still integrates to zero
  CHECK(std::abs(inner_embedded(mode(n, n, 0, 1), mode(n, n, 0, 1), geom) -
                 complex(1.0)) < 1e-13);
  // rho = 0 degenerates to the flat product
  const EmbeddedTorusGeometry flat(1.0, 0.0);
  const GridFunction f = mode(n, n, 2, -1);
  CHECK(std::abs(inner_embedded(f, f, flat) - inner_flat(f, f)) < 1e-14);
}

TEST_CASE("map_V: isometry, inverse, degenerate geometry") {
  Rng rng(401);
  for (double rho : {0.1, 0.5, 0.9}) {
    const EmbeddedTorusGeometry geom(1.0, rho);
    for (int i = 0; i < 34; ++i) {
      const GridFunction f = sample_state(random_mode_state(rng, 6), 32, 32, false);
      const GridFunction g = sample_state(random_mode_state(rng, 6), 32, 32, false);
      CHECK(std::abs(inner_flat(f, g) -
                     inner_embedded(map_V(f, geom), map_V(g, geom), geom)) <
            1e-10);
      CHECK(max_abs_diff(map_V_inverse(map_V(f, geom), geom), f) < 1e-13);
    }
  }
  const EmbeddedTorusGeometry flat(1.0, 0.0);
  const GridFunction f = mode(24, 24, 1, 1);
  CHECK(max_abs_diff(map_V(f, flat), f) == 0.0);
}

TEST_CASE("spectral J on pure modes") {
  const int n = 32;
  for (int k : {-5, 0, 3}) {
    const GridFunction f = mode(n, n, k, -k);
    GridFunction expected1 = f;
    for (auto& v : expected1.values) v *= double(k);
    CHECK(max_abs_diff(apply_J1(f), expected1) < 1e-11);
    GridFunction expected2 = f;
    for (auto& v : expected2.values) v *= double(-k);
    CHECK(max_abs_diff(apply_J2(f), expected2) < 1e-11);
  }
}

TEST_CASE("apply_Jtilde2 equals V J2 V^-1; reduces to -i d/dphi2 at rho=0") {
  Rng rng(402);
  for (double rho : {0.1, 0.5, 0.9}) {
    const EmbeddedTorusGeometry geom(1.0, rho);
    const GridFunction f = sample_state(random_mode_state(rng, 6), 24, 192, false);
    const GridFunction lhs = apply_Jtilde2(map_V(f, geom), geom);
    const GridFunction rhs = map_V(apply_J2(f), geom);
    CHECK(max_abs_diff(lhs, rhs) < 1e-8);
  }
  const EmbeddedTorusGeometry flat(1.0, 0.0);
  const GridFunction f = mode(16, 32, 0, 4);
  GridFunction expected = f;
  for (auto& v : expected.values) v *= 4.0;
  CHECK(max_abs_diff(apply_Jtilde2(f, flat), expected) < 1e-11);
}

TEST_CASE("Jtilde2 is self-adjoint in the weighted inner product") {
  Rng rng(403);
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  for (int i = 0; i < 5; ++i) {
    const GridFunction f = sample_state(random_mode_state(rng, 6), 24, 96, false);
    const GridFunction g = sample_state(random_mode_state(rng, 6), 24, 96, false);
    const complex lhs = inner_embedded(f, apply_Jtilde2(g, geom), geom);
    const complex rhs = std::conj(inner_embedded(g, apply_Jtilde2(f, geom), geom));
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("U_k and J1 act identically in both representations") {
  Rng rng(404);
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  const GridFunction ft = sample_state(random_mode_state(rng, 5), 48, 48, false);
  CHECK(max_abs_diff(map_V(apply_J1(map_V_inverse(ft, geom)), geom),
                     apply_J1(ft)) < 1e-10);
  for (int axis = 0; axis < 2; ++axis) {
    CHECK(max_abs_diff(map_V(apply_U(map_V_inverse(ft, geom), axis), geom),
                       apply_U(ft, axis)) < 1e-12);
  }
}

TEST_CASE("windowed probability is representation independent") {
  Rng rng(405);
  const EmbeddedTorusGeometry geom(1.0, 0.5);
  const TorusPhasePoint p(0.6, -0.9, pi, pi / 3.0);
  const TorusState s = build_state(p, make_sector(0.0, 0.0), 1e-14);

  const PhiWindow small{pi - 0.025, pi / 3.0 - 0.025, 0.05, 0.05};
  const auto [pe, pf] = density_invariance_check(s, geom, small);
  CHECK(std::abs(pe - pf) < 1e-10);

  // degenerate geometry: identical integrands
  const EmbeddedTorusGeometry flat(1.0, 0.0);
  const auto [qe, qf] = density_invariance_check(s, flat, small);
  CHECK(std::abs(qe - qf) < 1e-14);

  // full window recovers the normalization
  const auto [fe, ff] = density_invariance_check(s, geom, PhiWindow{});
  CHECK(std::abs(fe - 1.0) < 1e-6);
  CHECK(std::abs(ff - 1.0) < 1e-6);
}
