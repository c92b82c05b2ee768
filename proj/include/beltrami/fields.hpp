// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "beltrami/common.hpp"

namespace bel {

// Ellipticity bookkeeping: k in [0,1) and K >= 1 with k = (K-1)/(K+1); one is
// derived from the other exactly as stored.  K + 1/K equals 2(1+k^2)/(1-k^2).
struct EllipticityParams {
  double k = 0.0;
  double K = 1.0;

  static EllipticityParams from_k(double k);
  static EllipticityParams from_K(double K);
  double sum() const { return K + 1.0 / K; }  // K + 1/K
};

struct HolderData {
  double alpha = 0.5;    // exponent in (0,1)
  double constant = 0.0; // multiplicative constant
};

// Beltrami structural field H(z, zeta), k-Lipschitz in zeta with H(z,0) = 0.
// An optional inhomogeneity G rides along for conversions.
struct FieldH {
  std::function<cplx(cplx, cplx)> eval;
  EllipticityParams ell;
  std::optional<HolderData> holder;
  std::function<cplx(cplx)> inhom;  // G(z); empty means zero
  bool autonomous = false;

  cplx operator()(cplx z, cplx zeta) const { return eval(z, zeta); }
  cplx g_at(cplx z) const { return inhom ? inhom(z) : cplx(0.0, 0.0); }
};

// Divergence structural field A(z, xi).  Vectors are identified with complex
// numbers via (x1, x2) <-> x1 + i x2 and <a,b> = Re(a conj(b)); this
// convention is fixed across the library.
struct FieldA {
  std::function<cplx(cplx, cplx)> eval;
  EllipticityParams ell;
  std::optional<HolderData> holder;
  std::function<cplx(cplx)> data;  // g(z); empty means zero
  bool autonomous = false;

  cplx operator()(cplx z, cplx xi) const { return eval(z, xi); }
  cplx g_at(cplx z) const { return data ? data(z) : cplx(0.0, 0.0); }
};

// Sampling plan for certificates: z points in a square, argument pairs with
// log-uniform scales spanning several decades, plus structured tangential and
// radial pairs that chase the Lipschitz supremum.
struct SamplePlan {
  int z_count = 48;
  int pair_count = 192;
  double scale_min = 1e-2;
  double scale_max = 1e2;
  double domain_half_width = 0.5;
  std::uint64_t seed = 20240901;
};

struct CertificateH {
  double max_lipschitz = 0.0;   // sup |dH| / |dzeta|
  double max_at_zero = 0.0;     // sup |H(z, 0)|
  double max_holder = 0.0;      // sup (|dH| - k|dzeta|)+ / (|dz|^a (|z1|+|z2|))
  bool pass = false;
  double tol = 1e-9;
};
CertificateH check_ellipticity_H(const FieldH& h, const SamplePlan& plan);

struct CertificateA {
  double max_quotient = 0.0;     // sup (|dxi|^2+|dA|^2) / <dxi, dA>
  double threshold_K = 1.0;      // K solving K + 1/K = max_quotient
  double max_at_zero = 0.0;
  double min_delta = 1.0;        // inf <dA, dxi> / (|dA| |dxi|)
  double delta_reference = 1.0;  // 2K/(K^2+1) for the declared K
  double max_holder = 0.0;
  bool pass = false;
  double tol = 1e-9;
};
CertificateA check_ellipticity_A(const FieldA& a, const SamplePlan& plan);

// The two ellipticity inequalities evaluated on one difference quadruple: the
// contraction form |xi1-a1-xi2+a2| <= k |xi1+a1-xi2-a2| and the quadratic form
// with constant 2(1+k^2)/(1-k^2).  The booleans agree away from the decision
// boundary.
struct EquivalenceVerdict {
  bool contraction_form = false;
  bool quadratic_form = false;
  double gap_contraction = 0.0;  // rhs - lhs
  double gap_quadratic = 0.0;
};
EquivalenceVerdict claim1_equivalence(cplx xi1, cplx xi2, cplx a1, cplx a2,
                                      double k);

// Solves xi + A(z, xi) = zeta by a damped fixed-point iteration with the
// certified step tau = c/L^2, c = 2/(K+1/K), L = 1 + (K+1/K); secant
// extrapolation steps are taken only when they reduce the residual, so the
// geometric convergence guarantee is untouched.  Throws ConvergenceError when
// the cap implied by the contraction ratio is exceeded (an ellipticity
// violation of the supplied field).
cplx invert_monotone(const FieldA& a, cplx z, cplx zeta, double tol = 1e-13);

// Conversion of a divergence field into Beltrami form.
struct BeltramiConversion {
  FieldH hstar;  // H*(z,zeta) = (I - A)(I + A)^{-1}(zeta); k-Lipschitz
  FieldH h;      // normalized field H(z,zeta) = H*(z, conj zeta + g) - H*(z, g)
  std::function<cplx(cplx)> G;  // G(z) = H*(z, g(z)) + g(z)
};
BeltramiConversion a_to_hstar(const FieldA& a);

// Solves the scalar fixed point B = xi - H(z, conj(xi + B)) - G(z); the
// geometric ratio is the field's k.  B is the flux of the divergence-form
// equation satisfied by the real part: B(z, xi) = A(z, xi) - g(z) under the
// round-trip with a_to_hstar.
cplx h_to_b(const FieldH& h, cplx z, cplx xi, double tol = 1e-12);

// Samples the mixed Holder/Lipschitz bound of the converted field H* from a
// z-Holder divergence field, reporting the fitted constant per scale decade.
struct HolderReport {
  double constant = 0.0;               // overall fitted constant
  std::vector<double> per_scale;       // per zeta-decade maxima
  bool finite = false;
  bool stable = false;                 // max/min per-scale within a factor 4
};
HolderReport check_hstar_holder(const FieldA& a, const SamplePlan& plan);

}  // namespace bel
