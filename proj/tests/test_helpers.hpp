#pragma once

#include <complex>
#include <random>

namespace tcs_test {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double momentum(double lo, double hi) {
    const double m = uniform(lo, hi);
    return gen() & 1 ? m : -m;
  }
  std::complex<double> box(double re, double im) {
    return {uniform(-re, re), uniform(-im, im)};
  }
};

inline double rel_err(std::complex<double> a, std::complex<double> b,
                      double floor = 0.0) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

}  // namespace tcs_test
