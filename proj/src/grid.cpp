// SPDX-License-Identifier: Apache-2.0
#include "beltrami/grid.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "beltrami/interp.hpp"
#include "fft.hpp"

namespace bel {

ComplexGrid::ComplexGrid(double half_width, int n)
    : half_width_(half_width), n_(n) {
  if (half_width <= 0.0) throw std::invalid_argument("grid: half_width must be positive");
  if (!detail::is_power_of_two(n))
    throw std::invalid_argument("grid: N must be a power of two");
  values_.assign(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
}

ComplexGrid ComplexGrid::from_function(double half_width, int n,
                                       const std::function<cplx(cplx)>& f) {
  ComplexGrid g(half_width, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) g.at(j, k) = f(g.point(j, k));
  return g;
}

double smooth_cutoff_1d(double t, double flat, double outer, double sigma) {
  // erf-profile roll-off centered between flat and outer.  The width balances
  // plateau flatness against spectral decay; both tails scale like
  // exp(-(margin/sigma)^2).
  const double c = 0.5 * (flat + outer);
  return 0.5 * std::erfc((std::abs(t) - c) / sigma);
}

double window_sigma(double half_width, int n, double flat_fraction,
                    double outer_fraction) {
  const double h = 2.0 * half_width / n;
  const double margin = 0.5 * (outer_fraction - flat_fraction) * half_width;
  const double s = std::sqrt(2.0 * margin * h / kPi);
  return std::clamp(s, 2.5 * h, margin / 4.0);
}

double window_weight(cplx z, double half_width, int n, double flat_fraction,
                     double outer_fraction) {
  const double sigma = window_sigma(half_width, n, flat_fraction, outer_fraction);
  const double flat = flat_fraction * half_width;
  const double outer = outer_fraction * half_width;
  return smooth_cutoff_1d(z.real(), flat, outer, sigma) *
         smooth_cutoff_1d(z.imag(), flat, outer, sigma);
}

ComplexGrid apply_window(const ComplexGrid& g, double flat_fraction,
                         double outer_fraction) {
  ComplexGrid out = g;
  const int n = g.n();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out.at(j, k) *= window_weight(g.point(j, k), g.half_width(), n,
                                    flat_fraction, outer_fraction);
  return out;
}

std::pair<ComplexGrid, ComplexGrid> wirtinger(const ComplexGrid& g) {
  const int n = g.n();
  if (!detail::is_power_of_two(n))
    throw std::invalid_argument("wirtinger: N must be a power of two");

  std::vector<cplx> spec = g.values();
  detail::fft2(spec, n, true);

  ComplexGrid fz(g.half_width(), n);
  ComplexGrid fzb(g.half_width(), n);
  fz.set_singular_points(g.singular_points());
  fzb.set_singular_points(g.singular_points());

  std::vector<cplx> sz(spec.size()), szb(spec.size());
  const double base = kPi / g.half_width();  // 2*pi / period
  for (int j = 0; j < n; ++j) {
    const int mj = detail::freq_index(j, n);
    const double ky = (mj == -n / 2) ? 0.0 : base * mj;  // drop Nyquist
    for (int k = 0; k < n; ++k) {
      const int mk = detail::freq_index(k, n);
      const double kx = (mk == -n / 2) ? 0.0 : base * mk;
      const cplx kappa(kx, ky);
      const cplx v = spec[static_cast<size_t>(j) * n + k];
      // f_z = (i/2) conj(kappa) f^,  f_zbar = (i/2) kappa f^
      sz[static_cast<size_t>(j) * n + k] = cplx(0.0, 0.5) * std::conj(kappa) * v;
      szb[static_cast<size_t>(j) * n + k] = cplx(0.0, 0.5) * kappa * v;
    }
  }
  detail::fft2(sz, n, false);
  detail::fft2(szb, n, false);
  fz.values() = std::move(sz);
  fzb.values() = std::move(szb);
  return {std::move(fz), std::move(fzb)};
}

JetField::JetField(const ComplexGrid& f)
    : fz_(f.half_width(), f.n()),
      fzb_(f.half_width(), f.n()),
      fzz_(f.half_width(), f.n()),
      fzzb_(f.half_width(), f.n()),
      fzbzb_(f.half_width(), f.n()) {
  auto [d1, d1b] = wirtinger(f);
  auto [dzz, dzzb] = wirtinger(d1);
  auto [dzbz, dzbzb] = wirtinger(d1b);
  (void)dzbz;  // equals dzzb up to spectral round-off
  fz_ = std::move(d1);
  fzb_ = std::move(d1b);
  fzz_ = std::move(dzz);
  fzzb_ = std::move(dzzb);
  fzbzb_ = std::move(dzbzb);
}

Jet2 jet2_at(const ComplexGrid& f, cplx z) {
  const double L = f.half_width();
  const double h = f.spacing();
  if (std::abs(z.real()) >= L || std::abs(z.imag()) >= L)
    throw std::invalid_argument("jet2_at: point outside the domain");
  for (cplx s : f.singular_points())
    if (std::abs(z - s) < 4.0 * h)
      throw std::invalid_argument("jet2_at: point inside the singular exclusion zone");

  JetField jets(f);
  Jet2 out;
  out.fz = SpectralInterpolator(jets.fz())(z);
  out.fzb = SpectralInterpolator(jets.fzb())(z);
  out.fzz = SpectralInterpolator(jets.fzz())(z);
  out.fzzb = SpectralInterpolator(jets.fzzb())(z);
  out.fzbzb = SpectralInterpolator(jets.fzbzb())(z);
  if (!std::isfinite(out.fz.real()) || !std::isfinite(out.fzz.real()) ||
      !std::isfinite(out.fzbzb.real()))
    throw std::runtime_error("jet2_at: non-finite jet entry");
  return out;
}

// ------------------------------------------------------------- snapshot I/O

namespace {
constexpr char kMagic[8] = {'B', 'G', 'R', 'I', 'D', '0', '0', '1'};
}

void ComplexGrid::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);
  out << "# L=" << half_width_ << " N=" << n_ << "\n";
  out << "j,k,re,im\n";
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      const cplx v = at(j, k);
      out << j << ',' << k << ',' << v.real() << ',' << v.imag() << "\n";
    }
}

void ComplexGrid::save_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.write(kMagic, sizeof(kMagic));
  const std::int64_t n64 = n_;
  out.write(reinterpret_cast<const char*>(&half_width_), sizeof(double));
  out.write(reinterpret_cast<const char*>(&n64), sizeof(n64));
  out.write(reinterpret_cast<const char*>(values_.data()),
            static_cast<std::streamsize>(values_.size() * sizeof(cplx)));
}

ComplexGrid ComplexGrid::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (in && std::memcmp(magic, kMagic, sizeof(kMagic)) == 0) {
    double L = 0.0;
    std::int64_t n64 = 0;
    in.read(reinterpret_cast<char*>(&L), sizeof(double));
    in.read(reinterpret_cast<char*>(&n64), sizeof(n64));
    ComplexGrid g(L, static_cast<int>(n64));
    in.read(reinterpret_cast<char*>(g.values().data()),
            static_cast<std::streamsize>(g.values().size() * sizeof(cplx)));
    if (!in) throw std::runtime_error("truncated grid snapshot: " + path);
    return g;
  }

  // CSV fallback.
  in.close();
  std::ifstream csv(path);
  std::string line;
  if (!std::getline(csv, line) || line.rfind("# L=", 0) != 0)
    throw std::runtime_error("unrecognized grid snapshot: " + path);
  double L = 0.0;
  int n = 0;
  if (std::sscanf(line.c_str(), "# L=%lf N=%d", &L, &n) != 2)
    throw std::runtime_error("bad snapshot header: " + path);
  ComplexGrid g(L, n);
  std::getline(csv, line);  // column header
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    int j, k;
    double re, im;
    char c;
    ss >> j >> c >> k >> c >> re >> c >> im;
    if (!ss) throw std::runtime_error("bad snapshot row: " + line);
    g.at(j, k) = cplx(re, im);
  }
  return g;
}

}  // namespace bel
