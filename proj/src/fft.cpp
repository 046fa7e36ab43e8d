#include "rlu/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace rlu {
namespace {

cplx unit_root(std::size_t num, std::size_t den) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

void FftPlan::Radix2::run(std::span<cplx> x) const {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bitrev[i];
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2, stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      cplx* lo = x.data() + start;
      cplx* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const cplx v = hi[j] * twiddles[j * stride];
        hi[j] = lo[j] - v;
        lo[j] += v;
      }
    }
  }
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw ParameterError("FFT length must be positive");
  const std::size_t grid = std::has_single_bit(n) ? n : std::bit_ceil(2 * n - 1);
  radix2_.n = grid;
  radix2_.bitrev.resize(grid);
  const int bits = std::countr_zero(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
    radix2_.bitrev[i] = r;
  }
  radix2_.twiddles.resize(grid / 2);
  for (std::size_t t = 0; t < grid / 2; ++t) radix2_.twiddles[t] = unit_root(t, grid);

  if (grid == n) return;
  // exp(-i pi j^2 / n); j^2 is reduced mod 2n so the angle stays small and exact.
  chirp_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t e = (j * j) % (2 * n);
    chirp_[j] = unit_root(e, 2 * n);
  }
  kernel_fft_.assign(grid, cplx{});
  kernel_fft_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n; ++j) {
    kernel_fft_[j] = std::conj(chirp_[j]);
    kernel_fft_[grid - j] = std::conj(chirp_[j]);
  }
  radix2_.run(kernel_fft_);
}

void FftPlan::forward(std::span<cplx> x) const {
  if (x.size() != n_) throw DimensionError("FFT plan of length " + std::to_string(n_) + " applied to length " +
                                           std::to_string(x.size()));
  if (chirp_.empty()) {
    radix2_.run(x);
    return;
  }
  const std::size_t grid = radix2_.n;
  std::vector<cplx> work(grid, cplx{});
  for (std::size_t j = 0; j < n_; ++j) work[j] = x[j] * chirp_[j];
  radix2_.run(work);
  for (std::size_t j = 0; j < grid; ++j) work[j] = std::conj(work[j] * kernel_fft_[j]);
  radix2_.run(work);  // conj(FFT(conj(.))) is grid * inverse FFT
  const double scale = 1.0 / static_cast<double>(grid);
  for (std::size_t k = 0; k < n_; ++k) x[k] = std::conj(work[k]) * scale * chirp_[k];
}

void FftPlan::inverse(std::span<cplx> x) const {
  for (auto& v : x) v = std::conj(v);
  forward(x);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : x) v = std::conj(v) * scale;
}

}  // namespace rlu
