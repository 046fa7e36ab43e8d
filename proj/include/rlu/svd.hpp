#pragma once

#include <vector>

#include "rlu/matrix.hpp"

namespace rlu {

/// A = U diag(singular_values) V^T with r = min(m, n) columns in U and V.
struct SvdResult {
  RealMatrix U;
  std::vector<double> singular_values;  ///< nonincreasing
  RealMatrix V;
};

struct SvdOptions {
  double tol = 1e-12;            ///< stop once every pair has |cos angle| <= tol
  std::size_t max_sweeps = 60;
  std::size_t max_dimension = 2000;  ///< refuse min(m, n) above this
};

/// One-sided Jacobi SVD. Throws ConvergenceError after max_sweeps and ParameterError
/// when min(m, n) exceeds max_dimension.
SvdResult svd_oracle(const RealMatrix& a, const SvdOptions& opts = {});

/// Best rank-k approximation U_k diag(s_k) V_k^T.
RealMatrix truncated_reconstruction(const SvdResult& s, std::size_t k);

}  // namespace rlu
