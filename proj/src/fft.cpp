// SPDX-License-Identifier: Apache-2.0
#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace bel::detail {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Plan on a scratch buffer with FFTW_UNALIGNED so execution can run on
  // std::vector storage of any alignment.
  std::vector<cplx> scratch(static_cast<size_t>(n) * n);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

std::map<int, PlanPair>& plan_cache_1d() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair& plans_for_1d(int n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto& cache = plan_cache_1d();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> scratch(static_cast<size_t>(n));
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void fft1(cplx* data, int n, bool forward) {
  PlanPair& p = plans_for_1d(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(forward ? p.fwd : p.bwd, ptr, ptr);
  if (!forward) {
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) data[i] *= scale;
  }
}

void fft2(std::vector<cplx>& data, int n, bool forward) {
  if (data.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("fft2: size mismatch");
  PlanPair& p = plans_for(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(forward ? p.fwd : p.bwd, ptr, ptr);
  if (!forward) {
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (auto& v : data) v *= scale;
  }
}

}  // namespace bel::detail
