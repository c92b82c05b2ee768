// SPDX-License-Identifier: Apache-2.0
#include "beltrami/fields.hpp"

#include <cmath>

namespace bel {

EllipticityParams EllipticityParams::from_k(double k) {
  if (k < 0.0 || k >= 1.0) throw std::invalid_argument("ellipticity: k must be in [0,1)");
  return {k, (1.0 + k) / (1.0 - k)};
}

EllipticityParams EllipticityParams::from_K(double K) {
  if (K < 1.0) throw std::invalid_argument("ellipticity: K must be >= 1");
  return {(K - 1.0) / (K + 1.0), K};
}

namespace {

// Scale-aware sample pairs: random pairs at log-uniform scales plus
// tangential/radial near-pairs, which is where fields like w^3/|w|^2 attain
// their Lipschitz constant.
struct PairSampler {
  Rng rng;
  double smin, smax;
  explicit PairSampler(const SamplePlan& p) : rng(p.seed), smin(p.scale_min), smax(p.scale_max) {}

  std::pair<cplx, cplx> next(int i) {
    const double s = smin * std::pow(smax / smin, rng.uniform());
    const cplx w1 = s * rng.unit() * (0.25 + rng.uniform());
    switch (i % 4) {
      case 0:
        return {w1, s * rng.unit() * (0.25 + rng.uniform())};
      case 1:  // tangential near-pair
        return {w1, w1 * std::polar(1.0, 1e-4 * (0.5 + rng.uniform()))};
      case 2:  // radial near-pair
        return {w1, w1 * (1.0 + 1e-5 * (0.5 + rng.uniform()))};
      default:  // pair against zero
        return {w1, cplx(0.0, 0.0)};
    }
  }
};

}  // namespace

CertificateH check_ellipticity_H(const FieldH& h, const SamplePlan& plan) {
  CertificateH out;
  PairSampler pairs(plan);
  Rng zrng(plan.seed ^ 0x9e3779b97f4a7c15ull);

  for (int zi = 0; zi < plan.z_count; ++zi) {
    const cplx z = zrng.in_square(plan.domain_half_width);
    const cplx at0 = h(z, cplx(0.0, 0.0));
    if (!std::isfinite(at0.real()) || !std::isfinite(at0.imag()))
      throw std::runtime_error("check_ellipticity_H: non-finite field value");
    out.max_at_zero = std::max(out.max_at_zero, std::abs(at0));

    for (int i = 0; i < plan.pair_count; ++i) {
      auto [w1, w2] = pairs.next(i);
      if (std::abs(w1 - w2) < 1e-14) continue;
      const double q = std::abs(h(z, w1) - h(z, w2)) / std::abs(w1 - w2);
      if (!std::isfinite(q))
        throw std::runtime_error("check_ellipticity_H: non-finite quotient");
      out.max_lipschitz = std::max(out.max_lipschitz, q);
    }
  }

  if (h.holder) {
    for (int zi = 0; zi < plan.z_count; ++zi) {
      const cplx z1 = zrng.in_square(plan.domain_half_width);
      const cplx z2 = zrng.in_square(plan.domain_half_width);
      if (std::abs(z1 - z2) < 1e-12) continue;
      for (int i = 0; i < plan.pair_count / 4; ++i) {
        auto [w1, w2] = pairs.next(4 * i);  // generic pairs
        const double num =
            std::abs(h(z1, w1) - h(z2, w2)) - h.ell.k * std::abs(w1 - w2);
        const double den =
            std::pow(std::abs(z1 - z2), h.holder->alpha) * (std::abs(w1) + std::abs(w2));
        if (den > 0.0)
          out.max_holder = std::max(out.max_holder, std::max(num, 0.0) / den);
      }
    }
  }

  out.pass = out.max_lipschitz <= h.ell.k + out.tol && out.max_at_zero <= out.tol;
  if (h.holder) out.pass = out.pass && out.max_holder <= h.holder->constant + out.tol;
  return out;
}

CertificateA check_ellipticity_A(const FieldA& a, const SamplePlan& plan) {
  CertificateA out;
  out.delta_reference = 2.0 * a.ell.K / (a.ell.K * a.ell.K + 1.0);
  PairSampler pairs(plan);
  Rng zrng(plan.seed ^ 0xda3e39cb94b95bdbull);

  for (int zi = 0; zi < plan.z_count; ++zi) {
    const cplx z = zrng.in_square(plan.domain_half_width);
    out.max_at_zero = std::max(out.max_at_zero, std::abs(a(z, cplx(0.0, 0.0))));

    for (int i = 0; i < plan.pair_count; ++i) {
      auto [x1, x2] = pairs.next(i);
      const cplx dxi = x1 - x2;
      if (std::abs(dxi) < 1e-14) continue;
      const cplx da = a(z, x1) - a(z, x2);
      const double ip = inner(dxi, da);
      const double lhs = std::norm(dxi) + std::norm(da);
      if (ip <= 0.0) {
        out.max_quotient = std::numeric_limits<double>::infinity();
      } else {
        out.max_quotient = std::max(out.max_quotient, lhs / ip);
      }
      if (std::abs(da) > 1e-14)
        out.min_delta = std::min(out.min_delta, ip / (std::abs(da) * std::abs(dxi)));
    }
  }

  if (std::isfinite(out.max_quotient)) {
    const double q = std::max(out.max_quotient, 2.0);
    out.threshold_K = 0.5 * (q + std::sqrt(q * q - 4.0));
  } else {
    out.threshold_K = std::numeric_limits<double>::infinity();
  }

  if (a.holder) {
    for (int zi = 0; zi < plan.z_count; ++zi) {
      const cplx z1 = zrng.in_square(plan.domain_half_width);
      const cplx z2 = zrng.in_square(plan.domain_half_width);
      if (std::abs(z1 - z2) < 1e-12) continue;
      for (int i = 0; i < plan.pair_count / 4; ++i) {
        auto [x1, x2] = pairs.next(4 * i);
        (void)x2;
        const double den = std::pow(std::abs(z1 - z2), a.holder->alpha) * std::abs(x1);
        if (den > 0.0)
          out.max_holder =
              std::max(out.max_holder, std::abs(a(z1, x1) - a(z2, x1)) / den);
      }
    }
  }

  out.pass = std::isfinite(out.max_quotient) &&
             out.max_quotient <= a.ell.sum() + out.tol && out.max_at_zero <= out.tol;
  if (a.holder) out.pass = out.pass && out.max_holder <= a.holder->constant + out.tol;
  return out;
}

EquivalenceVerdict claim1_equivalence(cplx xi1, cplx xi2, cplx a1, cplx a2,
                                      double k) {
  EquivalenceVerdict v;
  const double lhs_c = std::abs(xi1 - a1 - xi2 + a2);
  const double rhs_c = k * std::abs(xi1 + a1 - xi2 - a2);
  v.gap_contraction = rhs_c - lhs_c;
  v.contraction_form = lhs_c <= rhs_c;

  const cplx dxi = xi1 - xi2;
  const cplx da = a1 - a2;
  const double lhs_q = std::norm(dxi) + std::norm(da);
  const double rhs_q = 2.0 * (1.0 + k * k) / (1.0 - k * k) * inner(dxi, da);
  v.gap_quadratic = rhs_q - lhs_q;
  v.quadratic_form = lhs_q <= rhs_q;
  return v;
}

cplx invert_monotone(const FieldA& a, cplx z, cplx zeta, double tol) {
  const double s = a.ell.sum();
  const double c = 2.0 / s;
  const double lip = 1.0 + s;
  const double tau = c / (lip * lip);
  const double ratio = std::sqrt(std::max(1.0 - c * c / (lip * lip), 0.25));
  const double target = tol * std::max(1.0, std::abs(zeta));

  auto residual = [&](cplx xi) { return xi + a(z, xi) - zeta; };

  cplx xi = zeta / 2.0;  // exact for A = identity, harmless otherwise
  cplx r = residual(xi);
  double rn = std::abs(r);
  if (rn <= target) return xi;

  const int cap =
      static_cast<int>(std::ceil(std::log(target / rn) / std::log(ratio))) + 50;

  cplx xi_prev = xi, r_prev = r;
  bool have_prev = false;
  for (int it = 0; it < cap; ++it) {
    cplx cand = xi - tau * r;
    if (have_prev) {
      // One-step secant extrapolation, kept only when it beats the damped step.
      const cplx dr = r - r_prev;
      const double dn = std::norm(dr);
      if (dn > 0.0) {
        const double theta = -(r.real() * dr.real() + r.imag() * dr.imag()) / dn;
        const cplx accel = xi + theta * (xi - xi_prev) - tau * (r + theta * dr);
        if (std::abs(residual(accel)) < std::abs(residual(cand))) cand = accel;
      }
    }
    xi_prev = xi;
    r_prev = r;
    have_prev = true;
    xi = cand;
    r = residual(xi);
    rn = std::abs(r);
    if (!std::isfinite(rn))
      throw ConvergenceError("invert_monotone: non-finite residual");
    if (rn <= target) return xi;
  }
  throw ConvergenceError("invert_monotone: iteration cap exceeded; the field "
                         "violates its declared ellipticity");
}

BeltramiConversion a_to_hstar(const FieldA& a) {
  BeltramiConversion out;

  auto hstar_eval = [a](cplx z, cplx zeta) -> cplx {
    const cplx xi = invert_monotone(a, z, zeta);
    return 2.0 * xi - zeta;  // xi - A(z,xi) with A(z,xi) = zeta - xi
  };

  out.hstar.eval = hstar_eval;
  out.hstar.ell = a.ell;
  out.hstar.holder = a.holder;
  out.hstar.autonomous = a.autonomous && !a.data;

  auto g = a.data;  // may be empty
  out.G = [g, hstar_eval](cplx z) -> cplx {
    const cplx gz = g ? g(z) : cplx(0.0, 0.0);
    return hstar_eval(z, gz) + gz;
  };

  out.h.eval = [g, hstar_eval](cplx z, cplx zeta) -> cplx {
    const cplx gz = g ? g(z) : cplx(0.0, 0.0);
    return hstar_eval(z, std::conj(zeta) + gz) - hstar_eval(z, gz);
  };
  out.h.ell = a.ell;
  out.h.holder = a.holder;
  out.h.autonomous = a.autonomous && !a.data;
  out.h.inhom = out.G;
  return out;
}

cplx h_to_b(const FieldH& h, cplx z, cplx xi, double tol) {
  const double k = h.ell.k;
  const cplx gz = h.g_at(z);
  const double target = tol * std::max(1.0, std::abs(xi));

  auto step = [&](cplx w) { return xi - h(z, std::conj(xi + w)) - gz; };

  // |step(w1) - step(w2)| <= k |w1 - w2|: once an update is below target the
  // residual of the new iterate is below k * target.
  cplx w(0.0, 0.0);
  cplx next = step(w);
  double delta = std::abs(next - w);
  const double logk = std::log(std::clamp(k, 1e-6, 0.999999));
  const int cap =
      delta <= target
          ? 1
          : static_cast<int>(std::ceil(std::log(target / delta) / logk)) + 50;

  for (int it = 0; it < cap; ++it) {
    if (!std::isfinite(delta)) throw ConvergenceError("h_to_b: non-finite iterate");
    if (delta <= target) return next;
    w = next;
    next = step(w);
    delta = std::abs(next - w);
  }
  if (delta <= target) return next;
  throw ConvergenceError("h_to_b: iteration cap exceeded; the field violates "
                         "its declared ellipticity");
}

HolderReport check_hstar_holder(const FieldA& a, const SamplePlan& plan) {
  if (!a.holder)
    throw std::invalid_argument("check_hstar_holder: field carries no Holder data");
  const auto conv = a_to_hstar(a);
  const double alpha = a.holder->alpha;
  const double k = a.ell.k;

  HolderReport rep;
  const int decades =
      std::max(1, static_cast<int>(std::round(std::log10(plan.scale_max / plan.scale_min))));
  rep.per_scale.assign(decades, 0.0);

  Rng rng(plan.seed ^ 0xa076bc91ull);
  for (int d = 0; d < decades; ++d) {
    const double s0 = plan.scale_min * std::pow(10.0, d);
    for (int i = 0; i < plan.pair_count; ++i) {
      const cplx z1 = rng.in_square(plan.domain_half_width);
      const cplx z2 = rng.in_square(plan.domain_half_width);
      if (std::abs(z1 - z2) < 1e-10) continue;
      const double s = s0 * std::pow(10.0, rng.uniform());
      const cplx w1 = s * rng.unit();
      const cplx w2 = (i % 2 == 0) ? w1 : s * rng.unit();
      const double num = std::abs(conv.hstar(z1, w1) - conv.hstar(z2, w2)) -
                         k * std::abs(w1 - w2);
      const double den =
          std::pow(std::abs(z1 - z2), alpha) * (std::abs(w1) + std::abs(w2));
      if (den > 0.0)
        rep.per_scale[d] = std::max(rep.per_scale[d], std::max(num, 0.0) / den);
    }
    rep.constant = std::max(rep.constant, rep.per_scale[d]);
  }

  rep.finite = std::isfinite(rep.constant);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double v : rep.per_scale) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  rep.stable = rep.finite && (lo == 0.0 ? hi == 0.0 : hi / lo <= 4.0);
  return rep;
}

}  // namespace bel
