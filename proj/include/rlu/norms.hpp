#pragma once

#include <cstdint>

#include "rlu/matrix.hpp"

namespace rlu {

enum class NormKind { spectral, frobenius };

struct PowerIterationOptions {
  double tol = 1e-10;
  std::size_t max_iters = 5000;
  std::uint64_t seed = 0x5EED5EEDULL;
};

struct NormEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Largest singular value by power iteration on A^H A. Never throws on non-convergence;
/// inspect `converged`.
template <Scalar T>
NormEstimate estimate_spectral_norm(const Matrix<T>& a, const PowerIterationOptions& opts = {});

/// As estimate_spectral_norm, but throws ConvergenceError (carrying the best estimate)
/// when the iteration cap is reached.
template <Scalar T>
double spectral_norm(const Matrix<T>& a, const PowerIterationOptions& opts = {});

template <Scalar T>
double matrix_norm(const Matrix<T>& a, NormKind kind) {
  return kind == NormKind::frobenius ? frobenius_norm(a) : spectral_norm(a);
}

}  // namespace rlu
