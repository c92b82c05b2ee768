// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "beltrami/grid.hpp"
#include "beltrami/interp.hpp"

namespace bel {

struct DiskSpec {
  cplx center{};
  double radius = 0.0;
};

// Throws unless the disk sits inside the `fraction` inner square of the grid.
void validate_disk(const DiskSpec& disk, double half_width, double fraction = 0.5);

// Polar-spectral calculus on a disk: Fourier modes in the angle, Chebyshev-
// Lobatto nodes in the radius.  Solves the half-Dirichlet problem
//
//     dF/dzbar = psi in D,   Re F = 0 on dD,   mean_theta Im F(R) = 0,
//
// sector by sector; the disk Cauchy transform is F and the disk Beurling
// transform is dF/dz.  Exactly the operator pair whose real part vanishes on
// the boundary circle, evaluated without any nearly-singular quadrature.
class PolarDisk {
 public:
  PolarDisk(DiskSpec disk, int n_theta = 256, int n_rho = 96);

  using Field = std::vector<cplx>;  // rho-major: [q * n_theta + i]

  const DiskSpec& disk() const { return disk_; }
  int n_theta() const { return n_theta_; }
  int n_rho() const { return n_rho_; }
  const std::vector<double>& rho() const { return rho_; }  // descending, rho[0]=R
  cplx node(int q, int i) const;
  const std::vector<cplx>& nodes() const { return nodes_; }

  Field sample(const std::function<cplx(cplx)>& f) const;
  Field sample_grid(const ComplexGrid& g) const;
  Field sample_interp(const SpectralInterpolator& interp) const;

  // Area integral, mean and L2 norm over the disk (Clenshaw-Curtis radial
  // weights, exact trapezoid in the angle).
  cplx integral(const Field& f) const;
  cplx mean(const Field& f) const;
  double norm_l2(const Field& f) const;

  struct DbarSolution {
    Field f;   // Cauchy transform values
    Field fz;  // Beurling transform values
  };
  DbarSolution solve_dbar(const Field& psi) const;

  Field cauchy(const Field& psi) const { return solve_dbar(psi).f; }
  Field beurling(const Field& psi) const { return solve_dbar(psi).fz; }

  // Values on the boundary ring (theta nodes).
  std::vector<cplx> boundary_ring(const Field& f) const;

  // Evaluate a polar field at arbitrary points with |pt - center| <= R.
  std::vector<cplx> evaluate(const Field& f, const std::vector<cplx>& pts) const;

  // Paint a polar field onto the grid points strictly inside the disk; other
  // points are zero.
  ComplexGrid to_grid(const Field& f, double half_width, int n) const;

 private:
  DiskSpec disk_;
  int n_theta_;
  int n_rho_;
  std::vector<double> rho_;
  std::vector<cplx> nodes_;
  std::vector<double> radial_weight_;  // Clenshaw-Curtis weights w.r.t. d(rho)

  struct RadialTables;
  std::shared_ptr<const RadialTables> tables_;
  void to_sectors(const Field& f, std::vector<cplx>& sectors) const;
  void from_sectors(const std::vector<cplx>& sectors, Field& f) const;
};

// Grid-level convenience wrappers (production route).
ComplexGrid cauchy_local(const ComplexGrid& psi, const DiskSpec& disk);
ComplexGrid beurling_local(const ComplexGrid& psi, const DiskSpec& disk);

// Reference route: direct singularity-subtracted quadrature of the two-term
// disk kernels at a single target point.  psi and its Wirtinger derivatives
// are supplied as callables; O(N^2) per target point.
cplx cauchy_local_quadrature(const std::function<cplx(cplx)>& psi,
                             const DiskSpec& disk, cplx z, int n_cells);
cplx beurling_local_quadrature(const std::function<cplx(cplx)>& psi,
                               const std::function<cplx(cplx)>& psi_z,
                               const std::function<cplx(cplx)>& psi_zb,
                               const DiskSpec& disk, cplx z, int n_cells);

}  // namespace bel
