// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <string>

namespace bel {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Thrown when a certified fixed-point iteration fails to reach its residual
// target within the computed cap.  Signals an ellipticity violation of the
// supplied field rather than a numerical accident.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic random stream.  mt19937_64 with explicit transforms so that
// identical seeds reproduce identical reports byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    // Box-Muller; avoids implementation-defined std::normal_distribution.
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  cplx complex_normal() { return {normal(), normal()}; }

  cplx in_square(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

  cplx in_disk(cplx center, double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = uniform(0.0, 2.0 * kPi);
    return center + cplx(r * std::cos(t), r * std::sin(t));
  }

  cplx unit() {
    const double t = uniform(0.0, 2.0 * kPi);
    return {std::cos(t), std::sin(t)};
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline double inner(cplx a, cplx b) { return std::real(a * std::conj(b)); }

}  // namespace bel
