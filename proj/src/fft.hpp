// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "beltrami/common.hpp"

namespace bel::detail {

// In-place 2D complex FFT on row-major n x n data.  Forward is unnormalized;
// inverse divides by n^2.  Plans are cached per size behind a mutex; execution
// is re-entrant.
void fft2(std::vector<cplx>& data, int n, bool forward);

// In-place 1D complex FFT, same conventions (inverse divides by n).
void fft1(cplx* data, int n, bool forward);

// Signed frequency index for bin i of an n-point transform.
inline int freq_index(int i, int n) { return i <= n / 2 - 1 ? i : i - n; }

bool is_power_of_two(int n);

}  // namespace bel::detail
