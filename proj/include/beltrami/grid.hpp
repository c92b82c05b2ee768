// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "beltrami/common.hpp"

namespace bel {

// Uniform periodic N x N sampling of the square [-L, L]^2 with complex values.
// Sample point z_{jk} = (-L + k h) + i (-L + j h), h = 2L/N.  N must be a
// power of two.  Immutable in spirit: operations return new grids.
class ComplexGrid {
 public:
  ComplexGrid(double half_width, int n);
  static ComplexGrid from_function(double half_width, int n,
                                   const std::function<cplx(cplx)>& f);

  double half_width() const { return half_width_; }
  int n() const { return n_; }
  double spacing() const { return 2.0 * half_width_ / n_; }

  cplx point(int j, int k) const {
    const double h = spacing();
    return {-half_width_ + k * h, -half_width_ + j * h};
  }

  cplx at(int j, int k) const { return values_[static_cast<size_t>(j) * n_ + k]; }
  cplx& at(int j, int k) { return values_[static_cast<size_t>(j) * n_ + k]; }

  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

  // Declared singular points of the represented function (e.g. the origin for
  // the homogeneous corpus maps).  Used by interpolation/jet preconditions.
  const std::vector<cplx>& singular_points() const { return singular_; }
  void set_singular_points(std::vector<cplx> pts) { singular_ = std::move(pts); }

  bool same_layout(const ComplexGrid& other) const {
    return n_ == other.n_ && half_width_ == other.half_width_;
  }

  // Snapshot I/O.  CSV rows are (j, k, re, im) after a header recording L, N;
  // the binary format carries the same payload behind a short magic header.
  void save_csv(const std::string& path) const;
  void save_binary(const std::string& path) const;
  static ComplexGrid load(const std::string& path);

 private:
  double half_width_;
  int n_;
  std::vector<cplx> values_;
  std::vector<cplx> singular_;
};

// Smooth cutoff equal to 1 near |t| <= flat and 0 beyond outer (erf profile
// of width sigma).
double smooth_cutoff_1d(double t, double flat, double outer, double sigma);

// Roll-off width balancing plateau flatness against spectral decay for an
// N-point grid.
double window_sigma(double half_width, int n, double flat_fraction = 0.6,
                    double outer_fraction = 0.97);

// Product cutoff equal to 1 on the inner `flat_fraction` of the square and 0
// near the boundary.  Applied before spectral differentiation to fake
// periodicity without touching interior values.
double window_weight(cplx z, double half_width, int n, double flat_fraction = 0.6,
                     double outer_fraction = 0.97);
ComplexGrid apply_window(const ComplexGrid& g, double flat_fraction = 0.6,
                         double outer_fraction = 0.97);

// Probe region: the inner 50% square where windowed fields are trustworthy.
inline bool in_probe_region(cplx z, double half_width, double fraction = 0.5) {
  return std::abs(z.real()) <= fraction * half_width &&
         std::abs(z.imag()) <= fraction * half_width;
}

// Spectral Wirtinger derivatives (f_z, f_zbar) of a periodic-compatible grid.
std::pair<ComplexGrid, ComplexGrid> wirtinger(const ComplexGrid& g);

// First- and second-order Wirtinger derivatives at a point.
struct Jet2 {
  cplx fz{}, fzb{}, fzz{}, fzzb{}, fzbzb{};
};

// Derivative bundle of a grid: both first derivatives and the three second
// derivatives, with point evaluation by spectral interpolation.
class JetField {
 public:
  explicit JetField(const ComplexGrid& f);

  const ComplexGrid& fz() const { return fz_; }
  const ComplexGrid& fzb() const { return fzb_; }
  const ComplexGrid& fzz() const { return fzz_; }
  const ComplexGrid& fzzb() const { return fzzb_; }
  const ComplexGrid& fzbzb() const { return fzbzb_; }

 private:
  ComplexGrid fz_, fzb_, fzz_, fzzb_, fzbzb_;
};

// All five derivatives of `f` at an interior point z, via two spectral
// differentiation passes plus local spectral interpolation.  Rejects z outside
// the domain or within 4h of a declared singular point.
Jet2 jet2_at(const ComplexGrid& f, cplx z);

}  // namespace bel
