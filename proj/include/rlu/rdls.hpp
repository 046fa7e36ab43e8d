#pragma once

#include <cstdint>
#include <vector>

#include "rlu/randomized_lu.hpp"

namespace rlu {

struct RdlsSolution {
  std::vector<double> x;     ///< length n, at most k nonzeros
  double residual_norm = 0;  ///< ||A x - b||_2
  std::size_t k_used = 0;
  std::size_t nonzero_count = 0;
  LowRankLU<double> factors;  ///< the randomized LU the solve was built on
};

/// Least squares through a rank-k randomized LU P A Q ~ L [U1 U2]:
/// y = L^+ P b, z1 = U1^{-1} y, z2 = 0, x = Q z. Requires m >= n.
RdlsSolution solve_rdls(const RealMatrix& a, std::span<const double> b, std::size_t k, std::size_t l,
                        std::uint64_t seed, PivotMode mode = PivotMode::partial);

}  // namespace rlu
