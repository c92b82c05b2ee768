// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "beltrami/grid.hpp"

namespace bel {

// Fourier coefficients A_n(r), B_n(r) of f_z and f_zbar on the circle
// |z - center| = radius, n in [-order, order].
struct CircleSpectrum {
  cplx center{};
  double radius = 0.0;
  int order = 0;
  std::vector<cplx> coeffs_a, coeffs_b;  // indexed n + order
  double parseval_residual_a = 0.0;      // relative truncation defects
  double parseval_residual_b = 0.0;

  cplx a(int n) const { return coeffs_a[static_cast<size_t>(n + order)]; }
  cplx b(int n) const { return coeffs_b[static_cast<size_t>(n + order)]; }

  double mean_square_a() const;  // sum |A_n|^2
  double mean_square_b() const;
};

// From derivative grids; circle samples are obtained by spectral
// interpolation at >= 8*order equispaced angles.  Requires order <= N/4 and
// the circle inside the domain interior.
CircleSpectrum circle_spectrum(const ComplexGrid& fz, const ComplexGrid& fzb,
                               cplx center, double radius, int order,
                               double parseval_tol = 1e-6);

// From closed-form derivative evaluators (corpus path).
CircleSpectrum circle_spectrum_fn(const std::function<cplx(cplx)>& fz,
                                  const std::function<cplx(cplx)>& fzb,
                                  cplx center, double radius, int order);

// Coefficients of the angular derivatives d/dphi f_z and d/dphi f_zbar:
// (i n A_n, i n B_n).
std::pair<std::vector<cplx>, std::vector<cplx>> angular_derivative_spectrum(
    const CircleSpectrum& s);

}  // namespace bel
