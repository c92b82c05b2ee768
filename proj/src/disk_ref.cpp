// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "beltrami/disk.hpp"

namespace bel {

namespace {

// Fraction of the square cell centered at c (side h) inside the disk.
double cell_fraction(cplx c, double h, cplx center, double radius) {
  const double d = std::abs(c - center);
  const double half_diag = h * 0.7071067811865476;
  if (d <= radius - half_diag) return 1.0;
  if (d >= radius + half_diag) return 0.0;
  int inside = 0;
  const int s = 8;
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      const cplx p = c + cplx((a + 0.5) / s - 0.5, (b + 0.5) / s - 0.5) * h;
      if (std::abs(p - center) <= radius) ++inside;
    }
  return static_cast<double>(inside) / (s * s);
}

template <typename F>
void for_disk_cells(const DiskSpec& disk, int n_cells, F&& body) {
  const double h = 2.0 * disk.radius / n_cells;
  for (int j = 0; j < n_cells; ++j)
    for (int k = 0; k < n_cells; ++k) {
      const cplx c = disk.center + cplx(-disk.radius + (k + 0.5) * h,
                                        -disk.radius + (j + 0.5) * h);
      const double w = cell_fraction(c, h, disk.center, disk.radius);
      if (w > 0.0) body(c, w * h * h);
    }
}

}  // namespace

cplx cauchy_local_quadrature(const std::function<cplx(cplx)>& psi,
                             const DiskSpec& disk, cplx z, int n_cells) {
  const cplx psi_z = psi(z);
  const cplx w0 = z - disk.center;
  const double r2 = disk.radius * disk.radius;

  cplx singular(0.0, 0.0), reflected(0.0, 0.0);
  for_disk_cells(disk, n_cells, [&](cplx zeta, double area) {
    const cplx d = z - zeta;
    if (std::abs(d) > 1e-14)
      singular += area * (psi(zeta) - psi_z) / d;
    reflected += area * w0 * std::conj(psi(zeta)) /
                 (r2 - w0 * std::conj(zeta - disk.center));
  });
  // The constant part integrates in closed form: (1/pi) int 1/(z-zeta) over
  // the disk equals conj(z - z0) for interior z.
  return singular / kPi + psi_z * std::conj(w0) - reflected / kPi;
}

cplx beurling_local_quadrature(const std::function<cplx(cplx)>& psi,
                               const std::function<cplx(cplx)>& psi_z,
                               const std::function<cplx(cplx)>& psi_zb,
                               const DiskSpec& disk, cplx z, int n_cells) {
  const cplx p0 = psi(z);
  const cplx a = psi_z(z);
  const cplx b = psi_zb(z);
  const cplx w0 = z - disk.center;
  const double r2 = disk.radius * disk.radius;

  cplx singular(0.0, 0.0), reflected(0.0, 0.0);
  for_disk_cells(disk, n_cells, [&](cplx zeta, double area) {
    const cplx d = z - zeta;
    if (std::abs(d) > 1e-14) {
      const cplx affine = p0 + a * (zeta - z) + b * std::conj(zeta - z);
      singular += area * (psi(zeta) - affine) / (d * d);
    }
    const cplx den = r2 - w0 * std::conj(zeta - disk.center);
    reflected += area * r2 * std::conj(psi(zeta)) / (den * den);
  });
  // Exact moments of the subtracted affine part over the disk: the constant
  // and the conjugate-linear term integrate to zero in the principal value
  // sense; the linear term contributes -pi conj(z - z0) times its slope.
  return -singular / kPi + a * std::conj(w0) - reflected / kPi;
}

}  // namespace bel
