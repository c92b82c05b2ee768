// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "beltrami/disk.hpp"
#include "beltrami/grid.hpp"
#include "beltrami/transforms.hpp"

using namespace bel;

namespace {

double l2_norm(const ComplexGrid& g) {
  double acc = 0.0;
  for (const cplx& v : g.values()) acc += std::norm(v);
  return std::sqrt(acc * g.spacing() * g.spacing());
}

// Smooth compactly supported bump (radial), with closed-form Wirtinger
// derivatives; supp = D(c, w).
struct Bump {
  cplx c;
  double w;
  double amp = 1.0;

  double s(cplx z) const { return std::norm(z - c) / (w * w); }
  cplx value(cplx z) const {
    const double t = s(z);
    if (t >= 1.0) return 0.0;
    return amp * std::exp(1.0 - 1.0 / (1.0 - t));
  }
  cplx dz(cplx z) const {
    const double t = s(z);
    if (t >= 1.0) return 0.0;
    const cplx v = value(z);
    const double g = -1.0 / ((1.0 - t) * (1.0 - t));
    return v * g * std::conj(z - c) / (w * w);
  }
  cplx dzb(cplx z) const {
    const double t = s(z);
    if (t >= 1.0) return 0.0;
    const cplx v = value(z);
    const double g = -1.0 / ((1.0 - t) * (1.0 - t));
    return v * g * (z - c) / (w * w);
  }
};

// Gaussian with closed-form Wirtinger derivatives; effectively compactly
// supported once sigma is a few times smaller than the box.
struct Gaussian {
  cplx c;
  double sigma;
  cplx amp{1.0, 0.0};

  cplx value(cplx z) const { return amp * std::exp(-std::norm(z - c) / (sigma * sigma)); }
  cplx dz(cplx z) const { return -value(z) * std::conj(z - c) / (sigma * sigma); }
  cplx dzb(cplx z) const { return -value(z) * (z - c) / (sigma * sigma); }
};

}  // namespace

TEST_CASE("global Beurling intertwines dz and dzbar on smooth data") {
  const int n = 256;
  Gaussian g{cplx(0.1, -0.2), 0.16};
  auto psi = ComplexGrid::from_function(1.0, n, [&](cplx z) { return g.dzb(z); });
  auto s = beurling_global(psi);
  double sup = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      sup = std::max(sup, std::abs(s.at(j, k) - g.dz(psi.point(j, k))));
  CHECK(sup < 1e-6);
}

TEST_CASE("global Beurling is an exact isometry on zero-mean data") {
  const int n = 128;
  Rng rng(11);
  ComplexGrid psi(1.0, n);
  for (auto& v : psi.values()) v = rng.complex_normal();
  const cplx mean =
      std::accumulate(psi.values().begin(), psi.values().end(), cplx(0, 0)) /
      static_cast<double>(n * n);
  for (auto& v : psi.values()) v -= mean;

  auto s = beurling_global(psi);
  const double r = l2_norm(s) / l2_norm(psi);
  CHECK(std::abs(r - 1.0) < 1e-12);
}

TEST_CASE("global Beurling of the unit disk indicator") {
  // S(chi_D)(z) = -1/z^2 outside, 0 inside; periodic images and the jump
  // limit the achievable pointwise accuracy (grid tolerance).
  const int n = 512;
  const double L = 4.0;
  auto psi = ComplexGrid::from_function(L, n, [](cplx z) {
    return std::abs(z) < 1.0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  });
  auto s = beurling_global(psi);
  double sup = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const cplx z = psi.point(j, k);
      const double r = std::abs(z);
      if (r < 0.75 && r > 0.05) {
        sup = std::max(sup, std::abs(s.at(j, k)));
      } else if (r > 1.35 && r < 2.0) {
        sup = std::max(sup, std::abs(s.at(j, k) + 1.0 / (z * z)));
      }
    }
  CHECK(sup < 2e-2);
}

TEST_CASE("global Beurling of zero is zero") {
  ComplexGrid psi(1.0, 64);
  auto s = beurling_global(psi);
  for (const cplx& v : s.values()) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("global Cauchy inverts dzbar on zero-mean data") {
  const int n = 128;
  Gaussian g{cplx(-0.15, 0.1), 0.2};
  auto psi = ComplexGrid::from_function(1.0, n, [&](cplx z) { return g.dzb(z); });
  auto f = cauchy_global(psi);
  auto [fz, fzb] = wirtinger(f);
  (void)fz;
  double sup = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      sup = std::max(sup, std::abs(fzb.at(j, k) - psi.at(j, k)));
  CHECK(sup < 1e-8);
}

// ---------------------------------------------------------------- local disk

TEST_CASE("polar disk quadrature integrates polynomials") {
  PolarDisk pd({cplx(0.0, 0.0), 0.8}, 64, 24);
  auto f = pd.sample([](cplx z) { return cplx(std::norm(z), 0.0); });  // |z|^2
  const cplx integral = pd.integral(f);
  // int |z|^2 over D(0,R) = pi R^4 / 2.
  CHECK(std::abs(integral - cplx(kPi * 0.5 * std::pow(0.8, 4), 0.0)) < 1e-12);
  const double nrm = pd.norm_l2(f);
  // ||z|^2|_L2 = sqrt(pi R^6/3).
  CHECK(nrm == doctest::Approx(std::sqrt(kPi * std::pow(0.8, 6) / 3.0)).epsilon(1e-12));
}

TEST_CASE("disk Cauchy transform of constants and monomials") {
  const double R = 1.0;
  PolarDisk pd({cplx(0.0, 0.0), R}, 64, 40);

  SUBCASE("psi = 1 gives zbar - z") {
    auto f = pd.cauchy(pd.sample([](cplx) { return cplx(1.0, 0.0); }));
    double sup = 0.0;
    for (int q = 0; q < pd.n_rho(); ++q)
      for (int i = 0; i < pd.n_theta(); ++i) {
        const cplx z = pd.node(q, i);
        sup = std::max(sup, std::abs(f[q * pd.n_theta() + i] - (std::conj(z) - z)));
      }
    CHECK(sup < 1e-12);
  }

  SUBCASE("psi = conj(z) gives (zbar^2 - z^2)/2") {
    auto f = pd.cauchy(pd.sample([](cplx z) { return std::conj(z); }));
    double sup = 0.0;
    for (int q = 0; q < pd.n_rho(); ++q)
      for (int i = 0; i < pd.n_theta(); ++i) {
        const cplx z = pd.node(q, i);
        const cplx want = 0.5 * (std::conj(z) * std::conj(z) - z * z);
        sup = std::max(sup, std::abs(f[q * pd.n_theta() + i] - want));
      }
    CHECK(sup < 1e-12);
  }

  SUBCASE("psi = z^2 conj(z) monomial formula") {
    // a=2, b=1: C[z^a zbar^b] = (z^a zbar^{b+1} - z^{|a-b-1|})/(b+1).
    auto f = pd.cauchy(pd.sample([](cplx z) { return z * z * std::conj(z); }));
    double sup = 0.0;
    for (int q = 0; q < pd.n_rho(); ++q)
      for (int i = 0; i < pd.n_theta(); ++i) {
        const cplx z = pd.node(q, i);
        const cplx zb = std::conj(z);
        const cplx want = 0.5 * (z * z * zb * zb - cplx(1.0, 0.0));
        sup = std::max(sup, std::abs(f[q * pd.n_theta() + i] - want));
      }
    CHECK(sup < 1e-11);
  }
}

TEST_CASE("disk Beurling of the constant is -1") {
  PolarDisk pd({cplx(0.2, 0.1), 0.6}, 64, 40);
  auto fz = pd.beurling(pd.sample([](cplx) { return cplx(1.0, 0.0); }));
  double sup = 0.0;
  for (const cplx& v : fz) sup = std::max(sup, std::abs(v + 1.0));
  CHECK(sup < 1e-11);
}

TEST_CASE("disk Cauchy real part vanishes on the boundary") {
  PolarDisk pd({cplx(0.0, 0.0), 0.9}, 128, 48);
  Rng rng(3);
  // Random smooth field, not vanishing at the boundary.
  auto psi = pd.sample([&](cplx z) {
    return std::exp(0.8 * z) + cplx(0.3, 0.1) * std::conj(z) * z + cplx(0.0, 0.2);
  });
  auto f = pd.cauchy(psi);
  const auto ring = pd.boundary_ring(f);
  double sup = 0.0, imean = 0.0;
  for (const cplx& v : ring) {
    sup = std::max(sup, std::abs(v.real()));
    imean += v.imag();
  }
  imean /= static_cast<double>(ring.size());
  CHECK(sup < 1e-10);
  CHECK(std::abs(imean) < 1e-10);
}

TEST_CASE("disk Beurling isometry on smooth fields") {
  PolarDisk pd({cplx(0.1, -0.05), 0.7}, 256, 96);
  SUBCASE("interior-supported smooth field") {
    Gaussian g{cplx(0.1, -0.05), 0.2};
    auto psi = pd.sample([&](cplx z) {
      return g.value(z) * std::exp(cplx(0.0, 3.0) * z.real());
    });
    const double in = pd.norm_l2(psi);
    const double out = pd.norm_l2(pd.beurling(psi));
    CHECK(std::abs(out / in - 1.0) < 1e-6);
  }
  SUBCASE("field with nonzero boundary values") {
    auto psi = pd.sample([&](cplx z) {
      const cplx w = z - cplx(0.1, -0.05);
      return std::exp(w) + 0.5 * std::conj(w) + cplx(0.2, -0.4) * w * std::conj(w);
    });
    const double in = pd.norm_l2(psi);
    const double out = pd.norm_l2(pd.beurling(psi));
    CHECK(std::abs(out / in - 1.0) < 1e-8);
  }
}

TEST_CASE("disk Beurling intertwining on interior-supported data") {
  const DiskSpec disk{cplx(0.0, 0.0), 0.8};
  PolarDisk pd(disk, 256, 96);
  Gaussian h{cplx(-0.1, 0.15), 0.18};
  auto psi = pd.sample([&](cplx z) { return h.dzb(z); });
  auto s = pd.beurling(psi);
  double sup = 0.0;
  for (int q = 0; q < pd.n_rho(); ++q)
    for (int i = 0; i < pd.n_theta(); ++i)
      sup = std::max(sup, std::abs(s[q * pd.n_theta() + i] - h.dz(pd.node(q, i))));
  CHECK(sup < 1e-4);
}

TEST_CASE("dzbar of the disk Cauchy transform recovers psi") {
  // Finite differences of the produced potential against the input, at
  // strictly interior points (independent of the polar construction).
  const DiskSpec disk{cplx(0.0, 0.0), 1.0};
  PolarDisk pd(disk, 128, 64);
  auto fun = [](cplx z) { return cplx(1.0, 0.0) + 0.3 * z + cplx(0.0, 0.2) * std::conj(z) * z; };
  auto f = pd.cauchy(pd.sample(fun));

  const double d = 1e-4;
  auto ev = [&](cplx p) { return pd.evaluate(f, {p})[0]; };
  double sup = 0.0;
  Rng rng(5);
  for (int t = 0; t < 12; ++t) {
    const cplx z = rng.in_disk(cplx(0.0, 0.0), 0.6);
    const cplx fx = (ev(z + d) - ev(z - d)) / (2.0 * d);
    const cplx fy = (ev(z + cplx(0, d)) - ev(z - cplx(0, d))) / (2.0 * d);
    const cplx fzb = 0.5 * (fx + cplx(0, 1) * fy);
    sup = std::max(sup, std::abs(fzb - fun(z)));
  }
  CHECK(sup < 1e-6);
}

TEST_CASE("polar route matches the quadrature reference") {
  const DiskSpec disk{cplx(0.0, 0.0), 0.75};
  PolarDisk pd(disk, 128, 64);
  Bump b{cplx(0.1, 0.05), 0.5, 0.8};
  auto fun = [&](cplx z) { return b.value(z) + cplx(0.0, 0.1) * z; };
  auto fun_z = [&](cplx z) { return b.dz(z) + cplx(0.0, 0.1); };
  auto fun_zb = [&](cplx z) { return b.dzb(z); };

  auto cpol = pd.cauchy(pd.sample(fun));
  auto bpol = pd.beurling(pd.sample(fun));

  Rng rng(17);
  double sup_c = 0.0, sup_b = 0.0;
  for (int t = 0; t < 6; ++t) {
    const cplx z = rng.in_disk(disk.center, 0.5 * disk.radius);
    const cplx cq = cauchy_local_quadrature(fun, disk, z, 400);
    const cplx bq = beurling_local_quadrature(fun, fun_z, fun_zb, disk, z, 400);
    sup_c = std::max(sup_c, std::abs(cq - pd.evaluate(cpol, {z})[0]));
    sup_b = std::max(sup_b, std::abs(bq - pd.evaluate(bpol, {z})[0]));
  }
  CHECK(sup_c < 5e-4);
  CHECK(sup_b < 5e-3);
}

TEST_CASE("grid-level local transforms run end to end") {
  const DiskSpec disk{cplx(0.0, 0.0), 0.45};
  Bump b{cplx(0.0, 0.0), 0.4};
  auto psi = ComplexGrid::from_function(1.0, 128, [&](cplx z) { return b.value(z); });
  auto c = cauchy_local(psi, disk);
  auto s = beurling_local(psi, disk);
  CHECK(std::abs(c.at(64, 64)) > 0.0);
  CHECK(std::abs(s.at(64, 64)) > 0.0);
  CHECK(c.at(0, 0) == cplx(0.0, 0.0));  // outside the disk
  CHECK_THROWS_AS(cauchy_local(psi, DiskSpec{cplx(0.4, 0.0), 0.3}),
                  std::invalid_argument);
}
