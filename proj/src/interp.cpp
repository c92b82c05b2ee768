// SPDX-License-Identifier: Apache-2.0
#include "beltrami/interp.hpp"

#include <cmath>

#include "fft.hpp"

namespace bel {

SpectralInterpolator::SpectralInterpolator(const ComplexGrid& g, int refine,
                                           int stencil)
    : half_width_(g.half_width()),
      fine_n_(g.n() * refine),
      stencil_(stencil) {
  if (!detail::is_power_of_two(g.n()))
    throw std::invalid_argument("SpectralInterpolator: N must be a power of two");
  if (stencil_ < 2 || stencil_ % 2 != 0)
    throw std::invalid_argument("SpectralInterpolator: stencil must be even and >= 2");

  const int n = g.n();
  std::vector<cplx> spec = g.values();
  detail::fft2(spec, n, true);

  // Embed the coarse spectrum into the fine one (frequencies are preserved,
  // everything new is zero).
  fine_.assign(static_cast<size_t>(fine_n_) * fine_n_, cplx(0.0, 0.0));
  for (int j = 0; j < n; ++j) {
    const int mj = detail::freq_index(j, n);
    const int fj = mj >= 0 ? mj : mj + fine_n_;
    for (int k = 0; k < n; ++k) {
      const int mk = detail::freq_index(k, n);
      const int fk = mk >= 0 ? mk : mk + fine_n_;
      fine_[static_cast<size_t>(fj) * fine_n_ + fk] =
          spec[static_cast<size_t>(j) * n + k];
    }
  }
  detail::fft2(fine_, fine_n_, false);
  const double scale = static_cast<double>(refine) * refine;
  for (auto& v : fine_) v *= scale;

  // Barycentric weights for an equispaced stencil: (-1)^j * C(S-1, j).
  lagrange_base_.resize(stencil_);
  double c = 1.0;
  for (int j = 0; j < stencil_; ++j) {
    lagrange_base_[j] = (j % 2 == 0) ? c : -c;
    c = c * (stencil_ - 1 - j) / (j + 1);
  }
}

cplx SpectralInterpolator::operator()(cplx z) const {
  const double h = 2.0 * half_width_ / fine_n_;
  const double tx = (z.real() + half_width_) / h;
  const double ty = (z.imag() + half_width_) / h;

  auto weights_1d = [&](double t, std::vector<double>& w, int& base) {
    base = static_cast<int>(std::floor(t)) - stencil_ / 2 + 1;
    w.assign(stencil_, 0.0);
    double sum = 0.0;
    int exact = -1;
    for (int j = 0; j < stencil_; ++j) {
      const double d = t - (base + j);
      if (std::abs(d) < 1e-12) {
        exact = j;
        break;
      }
      w[j] = lagrange_base_[j] / d;
      sum += w[j];
    }
    if (exact >= 0) {
      w.assign(stencil_, 0.0);
      w[exact] = 1.0;
    } else {
      for (auto& x : w) x /= sum;
    }
  };

  std::vector<double> wx, wy;
  int bx = 0, by = 0;
  weights_1d(tx, wx, bx);
  weights_1d(ty, wy, by);

  cplx acc(0.0, 0.0);
  for (int j = 0; j < stencil_; ++j) {
    const int row = ((by + j) % fine_n_ + fine_n_) % fine_n_;
    cplx rowacc(0.0, 0.0);
    for (int k = 0; k < stencil_; ++k) {
      const int col = ((bx + k) % fine_n_ + fine_n_) % fine_n_;
      rowacc += wx[k] * fine_[static_cast<size_t>(row) * fine_n_ + col];
    }
    acc += wy[j] * rowacc;
  }
  return acc;
}

std::vector<cplx> SpectralInterpolator::eval(const std::vector<cplx>& pts) const {
  std::vector<cplx> out(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) out[i] = (*this)(pts[i]);
  return out;
}

}  // namespace bel
