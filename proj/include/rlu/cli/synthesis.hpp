#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "rlu/matrix.hpp"

namespace rlu::cli {

/// Singular-value profile of a synthetic test matrix.
struct SpectrumSpec {
  enum class Kind {
    exponential,  ///< sigma_j = rho^j, j = 1..min(m, n)
    step,         ///< sigma_j = 1 for j <= rank, 0 afterwards
    custom,       ///< values read from a CSV file, padded with zeros
  };
  Kind kind = Kind::exponential;
  double rho = 0.5;
  std::size_t rank = 1;
  std::filesystem::path file;
  std::size_t m = 300;
  std::size_t n = 300;
  std::uint64_t seed = 0;
};

/// The min(m, n) target singular values, nonincreasing. Throws ParameterError on an invalid
/// specification.
std::vector<double> spectrum_values(const SpectrumSpec& spec);

/// Q1 diag(sigma) Q2^T where Q1 (m x r) and Q2 (n x r) are the Q factors of seeded Gaussian
/// matrices and r is the number of nonzero target values.
RealMatrix synthesize(const SpectrumSpec& spec);

/// Same construction for an explicit list of singular values.
RealMatrix matrix_with_singular_values(std::size_t m, std::size_t n, const std::vector<double>& sigma,
                                       std::uint64_t seed);

}  // namespace rlu::cli
