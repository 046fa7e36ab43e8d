#pragma once

#include <cstdint>

#include "rlu/matrix.hpp"

namespace rlu {

/// Counter-based generator: the i-th draw is a pure function of (seed, i), so a stream
/// can be reproduced anywhere from its seed alone.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double next_uniform() noexcept;
  /// Standard normal via Box-Muller; variates are produced in pairs.
  double next_normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// rows x cols matrix of i.i.d. N(0, 1) entries filled in row-major order.
RealMatrix gaussian_matrix(RandomStream& stream, std::size_t rows, std::size_t cols);
RealMatrix gaussian_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols);

}  // namespace rlu
