// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "beltrami/grid.hpp"

namespace bel {

// Evaluates a periodic grid field at arbitrary points: the spectrum is
// zero-padded by `refine`, inverted to a fine grid, and point values come from
// a tensor-product Lagrange stencil on that fine grid.  For fields whose
// spectrum is well inside the Nyquist band the result is accurate to near
// round-off.
class SpectralInterpolator {
 public:
  explicit SpectralInterpolator(const ComplexGrid& g, int refine = 4,
                                int stencil = 10);

  cplx operator()(cplx z) const;
  std::vector<cplx> eval(const std::vector<cplx>& pts) const;

  double half_width() const { return half_width_; }

 private:
  double half_width_;
  int fine_n_;
  int stencil_;
  std::vector<cplx> fine_;             // refine*N x refine*N values
  std::vector<double> lagrange_base_;  // binomial weights for the stencil
};

}  // namespace bel
