// SPDX-License-Identifier: Apache-2.0
#include "beltrami/transforms.hpp"

#include "fft.hpp"

namespace bel {

namespace {

enum class Multiplier { kBeurling, kCauchy, kDz };

ComplexGrid apply_multiplier(const ComplexGrid& g, Multiplier which) {
  const int n = g.n();
  std::vector<cplx> spec = g.values();
  detail::fft2(spec, n, true);

  const double base = kPi / g.half_width();
  for (int j = 0; j < n; ++j) {
    const double ky = base * detail::freq_index(j, n);
    for (int k = 0; k < n; ++k) {
      const double kx = base * detail::freq_index(k, n);
      const cplx kappa(kx, ky);
      cplx m(0.0, 0.0);
      if (kappa != cplx(0.0, 0.0)) {
        switch (which) {
          case Multiplier::kBeurling:
            m = std::conj(kappa) / kappa;
            break;
          case Multiplier::kCauchy:
            m = 2.0 / (cplx(0.0, 1.0) * kappa);
            break;
          case Multiplier::kDz:
            m = cplx(0.0, 0.5) * std::conj(kappa);
            break;
        }
      }
      spec[static_cast<size_t>(j) * n + k] *= m;
    }
  }
  detail::fft2(spec, n, false);
  ComplexGrid out(g.half_width(), g.n());
  out.values() = std::move(spec);
  return out;
}

}  // namespace

ComplexGrid beurling_global(const ComplexGrid& psi) {
  return apply_multiplier(psi, Multiplier::kBeurling);
}

ComplexGrid cauchy_global(const ComplexGrid& psi) {
  return apply_multiplier(psi, Multiplier::kCauchy);
}

ComplexGrid dz_global(const ComplexGrid& psi) {
  return apply_multiplier(psi, Multiplier::kDz);
}

}  // namespace bel
