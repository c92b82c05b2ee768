// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "beltrami/grid.hpp"

namespace bel {

// Global Beurling transform via the frequency multiplier conj(kappa)/kappa
// (zero at the zero frequency).  Unimodular at every nonzero frequency, so it
// is an exact l2 isometry on zero-mean data.
ComplexGrid beurling_global(const ComplexGrid& psi);

// Global solution operator for d/dzbar: frequency multiplier 2/(i kappa),
// zero at the zero frequency.  apply d/dzbar to the output to recover the
// zero-mean part of psi.
ComplexGrid cauchy_global(const ComplexGrid& psi);

// d/dz counterpart (used for conjugate-pair data assembly).
ComplexGrid dz_global(const ComplexGrid& psi);

}  // namespace bel
