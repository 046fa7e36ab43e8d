#include "rlu/random.hpp"

#include <cmath>
#include <numbers>

namespace rlu {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) noexcept : seed_(seed), key_(mix64(seed + kGolden)) {}

std::uint64_t RandomStream::next_u64() noexcept {
  const std::uint64_t c = counter_++;
  return mix64(key_ + (c + 1) * kGolden);
}

double RandomStream::next_uniform() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

RealMatrix gaussian_matrix(RandomStream& stream, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ParameterError("gaussian_matrix requires rows, cols >= 1");
  RealMatrix g(rows, cols);
  for (double& x : g.values()) x = stream.next_normal();
  return g;
}

RealMatrix gaussian_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols) {
  RandomStream stream(seed);
  return gaussian_matrix(stream, rows, cols);
}

}  // namespace rlu
