#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rlu/matrix.hpp"

namespace rlu {

/// Discrete Fourier transform of a fixed length n.
/// forward: X_k = sum_j x_j exp(-2 pi i jk / n) (unnormalised).
/// inverse: the exact inverse of forward, including the 1/n factor.
/// Powers of two use iterative radix-2; other lengths go through Bluestein's chirp-z
/// convolution on a power-of-two grid.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  void forward(std::span<cplx> x) const;
  void inverse(std::span<cplx> x) const;

 private:
  struct Radix2 {
    std::size_t n = 0;
    std::vector<std::size_t> bitrev;
    std::vector<cplx> twiddles;  // exp(-2 pi i t / n), t < n/2
    void run(std::span<cplx> x) const;
  };

  std::size_t n_;
  Radix2 radix2_;
  // Bluestein data, empty for power-of-two lengths.
  std::vector<cplx> chirp_;          // exp(-i pi j^2 / n)
  std::vector<cplx> kernel_fft_;     // transform of the conjugate chirp, padded
};

}  // namespace rlu
