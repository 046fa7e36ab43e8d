#pragma once

#include <cstdint>

#include "rlu/randomized_lu.hpp"

namespace rlu {

enum class FastLuPath {
  structured,  ///< B from the factored form of L_y^+ P X; never forms X
  reference,   ///< materialises X through idec and multiplies literally
};

/// Smallest l of the SRFT regime 4 (sqrt(k) + sqrt(8 ln(kn)))^2 ln k; below it the
/// factorization still runs but records a warning.
double srft_minimum_sketch(std::size_t n, std::size_t k);

/// Randomized LU with an SRFT sketch and a row ID of the sketch:
/// Y = A R, P Y = L_y U_y truncated to k, Y = X Y(J, :), B = L_y^+ P X A(J, :),
/// B Q = L_b U_b, L = L_y L_b, U = U_b. The ID uses r = rank_detected(Y) >= k rows.
LowRankLU<cplx> fast_randomized_lu(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed,
                                   FastLuPath path = FastLuPath::structured);

}  // namespace rlu
