// SPDX-License-Identifier: Apache-2.0
#include "beltrami/disk.hpp"

#include <array>
#include <cmath>

#include "fft.hpp"

namespace bel {

namespace {

// r^p for r in [0,1], p >= 0, underflow clamped to zero.
inline double ratio_pow(double r, double p) {
  if (r <= 0.0) return p == 0.0 ? 1.0 : 0.0;
  if (r >= 1.0) return 1.0;
  const double e = p * std::log(r);
  return e < -745.0 ? 0.0 : std::exp(e);
}

// Clenshaw-Curtis weights for Lobatto nodes x_j = cos(pi j / N) on [-1, 1].
std::vector<double> cc_weights(int npts) {
  const int bigN = npts - 1;
  std::vector<double> w(npts, 0.0);
  for (int j = 0; j <= bigN; ++j) {
    double acc = 0.0;
    for (int m = 0; m <= bigN; m += 2) {
      const double im = 2.0 / (1.0 - static_cast<double>(m) * m);
      double scale = 2.0 / bigN;
      if (m == 0 || m == bigN) scale *= 0.5;
      acc += scale * im * std::cos(kPi * m * j / bigN);
    }
    if (j == 0 || j == bigN) acc *= 0.5;
    w[j] = acc;
  }
  return w;
}

constexpr int kGauss = 8;
// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, kGauss> kGx = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, kGauss> kGw = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

constexpr int kStencil = 5;  // local radial interpolation degree 4

}  // namespace

void validate_disk(const DiskSpec& disk, double half_width, double fraction) {
  if (disk.radius <= 0.0) throw std::invalid_argument("disk: radius must be positive");
  const double lim = fraction * half_width;
  if (std::abs(disk.center.real()) + disk.radius > lim ||
      std::abs(disk.center.imag()) + disk.radius > lim)
    throw std::invalid_argument("disk: must stay inside the inner probe region");
}

struct PolarDisk::RadialTables {
  struct Interval {
    int stencil0;                          // first node index of the stencil
    std::array<double, kGauss> s;          // abscissas in rho
    std::array<double, kGauss> w;          // scaled Gauss weights
    std::array<std::array<double, kStencil>, kGauss> basis;
  };
  // intervals[q] spans [rho_{q+1}, rho_q] (top-down).
  std::vector<Interval> intervals;
};

PolarDisk::PolarDisk(DiskSpec disk, int n_theta, int n_rho)
    : disk_(disk), n_theta_(n_theta), n_rho_(n_rho) {
  if (disk.radius <= 0.0) throw std::invalid_argument("PolarDisk: radius must be positive");
  if (!detail::is_power_of_two(n_theta))
    throw std::invalid_argument("PolarDisk: n_theta must be a power of two");
  if (n_rho < kStencil + 1) throw std::invalid_argument("PolarDisk: n_rho too small");

  rho_.resize(n_rho_);
  for (int q = 0; q < n_rho_; ++q)
    rho_[q] = disk_.radius * 0.5 * (1.0 + std::cos(kPi * q / (n_rho_ - 1)));
  rho_.back() = 0.0;

  nodes_.resize(static_cast<size_t>(n_rho_) * n_theta_);
  for (int q = 0; q < n_rho_; ++q)
    for (int i = 0; i < n_theta_; ++i)
      nodes_[static_cast<size_t>(q) * n_theta_ + i] =
          disk_.center + std::polar(rho_[q], 2.0 * kPi * i / n_theta_);

  radial_weight_ = cc_weights(n_rho_);
  for (auto& w : radial_weight_) w *= 0.5 * disk_.radius;

  auto tables = std::make_shared<RadialTables>();
  tables->intervals.reserve(n_rho_ - 1);
  for (int q = 0; q + 1 < n_rho_; ++q) {
    RadialTables::Interval iv;
    const double a = rho_[q + 1];
    const double b = rho_[q];
    iv.stencil0 = std::clamp(q - 1, 0, n_rho_ - kStencil);
    for (int g = 0; g < kGauss; ++g) {
      iv.s[g] = 0.5 * (a + b) + 0.5 * (b - a) * kGx[g];
      iv.w[g] = 0.5 * (b - a) * kGw[g];
      for (int t = 0; t < kStencil; ++t) {
        double num = 1.0, den = 1.0;
        const double xt = rho_[iv.stencil0 + t];
        for (int u = 0; u < kStencil; ++u) {
          if (u == t) continue;
          const double xu = rho_[iv.stencil0 + u];
          num *= (iv.s[g] - xu);
          den *= (xt - xu);
        }
        iv.basis[g][t] = num / den;
      }
    }
    tables->intervals.push_back(iv);
  }
  tables_ = std::move(tables);
}

cplx PolarDisk::node(int q, int i) const {
  return nodes_[static_cast<size_t>(q) * n_theta_ + i];
}

PolarDisk::Field PolarDisk::sample(const std::function<cplx(cplx)>& f) const {
  Field out(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) out[i] = f(nodes_[i]);
  return out;
}

PolarDisk::Field PolarDisk::sample_grid(const ComplexGrid& g) const {
  return sample_interp(SpectralInterpolator(g));
}

PolarDisk::Field PolarDisk::sample_interp(const SpectralInterpolator& interp) const {
  Field out(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) out[i] = interp(nodes_[i]);
  return out;
}

cplx PolarDisk::integral(const Field& f) const {
  cplx acc(0.0, 0.0);
  for (int q = 0; q < n_rho_; ++q) {
    cplx ring(0.0, 0.0);
    for (int i = 0; i < n_theta_; ++i)
      ring += f[static_cast<size_t>(q) * n_theta_ + i];
    acc += radial_weight_[q] * rho_[q] * ring * (2.0 * kPi / n_theta_);
  }
  return acc;
}

cplx PolarDisk::mean(const Field& f) const {
  return integral(f) / (kPi * disk_.radius * disk_.radius);
}

double PolarDisk::norm_l2(const Field& f) const {
  double acc = 0.0;
  for (int q = 0; q < n_rho_; ++q) {
    double ring = 0.0;
    for (int i = 0; i < n_theta_; ++i)
      ring += std::norm(f[static_cast<size_t>(q) * n_theta_ + i]);
    acc += radial_weight_[q] * rho_[q] * ring * (2.0 * kPi / n_theta_);
  }
  return std::sqrt(std::max(acc, 0.0));
}

void PolarDisk::to_sectors(const Field& f, std::vector<cplx>& sectors) const {
  sectors = f;
  for (int q = 0; q < n_rho_; ++q) {
    cplx* ring = sectors.data() + static_cast<size_t>(q) * n_theta_;
    detail::fft1(ring, n_theta_, true);
    const double scale = 1.0 / n_theta_;
    for (int i = 0; i < n_theta_; ++i) ring[i] *= scale;
    ring[n_theta_ / 2] = cplx(0.0, 0.0);  // drop the angular Nyquist sector
  }
}

void PolarDisk::from_sectors(const std::vector<cplx>& sectors, Field& f) const {
  f = sectors;
  for (int q = 0; q < n_rho_; ++q) {
    cplx* ring = f.data() + static_cast<size_t>(q) * n_theta_;
    detail::fft1(ring, n_theta_, false);
    for (int i = 0; i < n_theta_; ++i) ring[i] *= static_cast<double>(n_theta_);
  }
}

PolarDisk::DbarSolution PolarDisk::solve_dbar(const Field& psi) const {
  const auto& intervals = tables_->intervals;
  const int nt = n_theta_;
  const int nr = n_rho_;
  const double R = disk_.radius;

  std::vector<cplx> psec;
  to_sectors(psi, psec);
  auto psi_sector = [&](int n, int q) -> cplx {
    if (n <= -nt / 2 || n > nt / 2 - 1) return cplx(0.0, 0.0);
    const int bin = n >= 0 ? n : n + nt;
    return psec[static_cast<size_t>(q) * nt + bin];
  };

  // Integral over one interval of (s/ref)^{+-m} * psi_n(s); every ratio is
  // <= 1 so large sector orders cannot overflow.
  auto interval_integral = [&](int n, int q_interval, double ref, double mpow,
                               bool upward) -> cplx {
    const auto& iv = intervals[q_interval];
    cplx acc(0.0, 0.0);
    for (int g = 0; g < kGauss; ++g) {
      cplx val(0.0, 0.0);
      for (int t = 0; t < kStencil; ++t)
        val += iv.basis[g][t] * psi_sector(n, iv.stencil0 + t);
      const double w = upward ? ratio_pow(iv.s[g] / ref, mpow)
                              : ratio_pow(ref / iv.s[g], mpow);
      acc += iv.w[g] * w * val;
    }
    return acc;
  };

  std::vector<cplx> fsec(psec.size(), cplx(0.0, 0.0));
  std::vector<cplx> fzsec(psec.size(), cplx(0.0, 0.0));
  auto fm = [&](int m, int q) -> cplx& {
    const int bin = m >= 0 ? m : m + nt;
    return fsec[static_cast<size_t>(q) * nt + bin];
  };
  auto fm_val = [&](int m, int q) -> cplx {
    if (m <= -nt / 2 || m > nt / 2 - 1) return cplx(0.0, 0.0);
    const int bin = m >= 0 ? m : m + nt;
    return fsec[static_cast<size_t>(q) * nt + bin];
  };

  // m <= -1: regular solution, integrate upward from the center; no DOF.
  for (int m = -nt / 2 + 1; m <= -1; ++m) {
    const double am = -m;
    cplx u(0.0, 0.0);
    for (int q = nr - 2; q >= 0; --q) {
      const double target = rho_[q];
      u = ratio_pow(rho_[q + 1] / target, am) * u +
          interval_integral(m + 1, q, target, am, true);
      fm(m, q) = 2.0 * u;
    }
  }

  // m = 0: cumulative integral from the center; constant fixed so F_0(R) = 0
  // (vanishing real part plus the zero-mean imaginary convention).
  {
    std::vector<cplx> part(nr, cplx(0.0, 0.0));
    cplx v(0.0, 0.0);
    for (int q = nr - 2; q >= 0; --q) {
      v += interval_integral(1, q, 1.0, 0.0, true);
      part[q] = 2.0 * v;
    }
    const cplx c0 = -part[0];
    for (int q = 0; q < nr; ++q) fm(0, q) = part[q] + c0;
  }

  // m >= 1: particular part vanishing at the boundary (integrate downward);
  // the free constant couples to sector -m through Re F = 0 on the circle.
  for (int m = 1; m <= nt / 2 - 1; ++m) {
    const double dm = m;
    std::vector<cplx> wpart(nr, cplx(0.0, 0.0));
    cplx w(0.0, 0.0);
    for (int q = 0; q + 1 < nr; ++q) {
      const double target = rho_[q + 1];
      w = ratio_pow(target / rho_[q], dm) * w +
          interval_integral(m + 1, q, target, dm, false);
      wpart[q + 1] = w;
    }
    const cplx cm = -std::conj(fm_val(-m, 0));  // F_m(R) = -conj(F_{-m}(R))
    for (int q = 0; q < nr; ++q)
      fm(m, q) = cm * ratio_pow(rho_[q] / R, dm) - 2.0 * wpart[q];
  }

  // dF/dz sector by sector: (S psi)_p = (p+1) F_{p+1}/rho + psi_{p+2}.
  // At the center only p = 0 survives, with value C_1/R - 2 int_0^R psi_2/s.
  cplx t_int(0.0, 0.0);
  for (int q = nr - 2; q >= 0; --q) {
    const auto& iv = intervals[q];
    for (int g = 0; g < kGauss; ++g) {
      cplx val(0.0, 0.0);
      for (int t = 0; t < kStencil; ++t)
        val += iv.basis[g][t] * psi_sector(2, iv.stencil0 + t);
      t_int += iv.w[g] * val / iv.s[g];
    }
  }
  const cplx c1_over_R = fm_val(1, 0) / R;  // F_1(R) = C_1, W_1(R) = 0

  for (int p = -nt / 2 + 1; p <= nt / 2 - 1; ++p) {
    const int bin = p >= 0 ? p : p + nt;
    for (int q = 0; q < nr; ++q) {
      cplx v;
      if (q == nr - 1) {
        v = (p == 0) ? (c1_over_R - 2.0 * t_int) : cplx(0.0, 0.0);
      } else {
        v = psi_sector(p + 2, q);
        if (p + 1 != 0)
          v += static_cast<double>(p + 1) * fm_val(p + 1, q) / rho_[q];
      }
      fzsec[static_cast<size_t>(q) * nt + bin] = v;
    }
  }

  DbarSolution out;
  from_sectors(fsec, out.f);
  from_sectors(fzsec, out.fz);
  return out;
}

std::vector<cplx> PolarDisk::boundary_ring(const Field& f) const {
  return {f.begin(), f.begin() + n_theta_};
}

std::vector<cplx> PolarDisk::evaluate(const Field& f, const std::vector<cplx>& pts) const {
  const int nt = n_theta_;
  const int nr = n_rho_;
  std::vector<cplx> sectors;
  to_sectors(f, sectors);

  // Chebyshev coefficients of every sector profile (DCT-I over Lobatto data).
  std::vector<cplx> coef(static_cast<size_t>(nt) * nr, cplx(0.0, 0.0));
  const int bigN = nr - 1;
  for (int bin = 0; bin < nt; ++bin) {
    for (int c = 0; c <= bigN; ++c) {
      cplx acc(0.0, 0.0);
      for (int q = 0; q <= bigN; ++q) {
        double w = std::cos(kPi * c * q / bigN);
        if (q == 0 || q == bigN) w *= 0.5;
        acc += w * sectors[static_cast<size_t>(q) * nt + bin];
      }
      acc *= 2.0 / bigN;
      if (c == 0 || c == bigN) acc *= 0.5;
      coef[static_cast<size_t>(bin) * nr + c] = acc;
    }
  }

  std::vector<cplx> out(pts.size());
  for (size_t ip = 0; ip < pts.size(); ++ip) {
    const cplx d = pts[ip] - disk_.center;
    const double r = std::abs(d);
    if (r > disk_.radius * (1.0 + 1e-12))
      throw std::invalid_argument("PolarDisk::evaluate: point outside the disk");
    const double x = std::clamp(2.0 * r / disk_.radius - 1.0, -1.0, 1.0);
    const double theta = std::atan2(d.imag(), d.real());
    const cplx eit = std::polar(1.0, theta);

    cplx total(0.0, 0.0);
    cplx phase_pos = eit;               // e^{i n theta}, n >= 1
    cplx phase_neg = std::conj(eit);    // n <= -1
    auto clenshaw = [&](int bin) -> cplx {
      const cplx* cc = &coef[static_cast<size_t>(bin) * nr];
      cplx b1(0.0, 0.0), b2(0.0, 0.0);
      for (int c = bigN; c >= 1; --c) {
        const cplx b0 = 2.0 * x * b1 - b2 + cc[c];
        b2 = b1;
        b1 = b0;
      }
      return x * b1 - b2 + cc[0];
    };
    total += clenshaw(0);
    for (int n = 1; n <= nt / 2 - 1; ++n) {
      total += clenshaw(n) * phase_pos;
      total += clenshaw(nt - n) * phase_neg;
      phase_pos *= eit;
      phase_neg *= std::conj(eit);
    }
    out[ip] = total;
  }
  return out;
}

ComplexGrid PolarDisk::to_grid(const Field& f, double half_width, int n) const {
  ComplexGrid out(half_width, n);
  std::vector<cplx> pts;
  std::vector<std::pair<int, int>> idx;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const cplx z = out.point(j, k);
      if (std::abs(z - disk_.center) < disk_.radius) {
        pts.push_back(z);
        idx.emplace_back(j, k);
      }
    }
  const auto vals = evaluate(f, pts);
  for (size_t i = 0; i < idx.size(); ++i)
    out.at(idx[i].first, idx[i].second) = vals[i];
  return out;
}

ComplexGrid cauchy_local(const ComplexGrid& psi, const DiskSpec& disk) {
  validate_disk(disk, psi.half_width());
  PolarDisk pd(disk);
  const auto field = pd.sample_grid(psi);
  return pd.to_grid(pd.cauchy(field), psi.half_width(), psi.n());
}

ComplexGrid beurling_local(const ComplexGrid& psi, const DiskSpec& disk) {
  validate_disk(disk, psi.half_width());
  PolarDisk pd(disk);
  const auto field = pd.sample_grid(psi);
  return pd.to_grid(pd.beurling(field), psi.half_width(), psi.n());
}

}  // namespace bel
