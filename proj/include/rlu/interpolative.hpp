#pragma once

#include <vector>

#include "rlu/lu.hpp"
#include "rlu/matrix.hpp"

namespace rlu {

/// Y ~ X Y(J, :) with X(J, :) = I_r.
template <Scalar T>
struct RowID {
  std::vector<std::size_t> J;
  Matrix<T> X;  ///< m x r
  std::size_t r = 0;
};

enum class IdEngine {
  lu,  ///< column-pivoted LU of Y^H
  qr,  ///< column-pivoted Householder QR of Y^H
};

/// Rank-r row ID. Rows are chosen by the pivots of the factorization of Y^H; the
/// coefficients solve the leading r x r triangular block. Throws RankDeficiencyError when
/// the factorization detects fewer than r independent rows.
template <Scalar T>
RowID<T> row_id(const Matrix<T>& y, std::size_t r, IdEngine engine = IdEngine::lu);

/// Full-rank row ID with r = cols(Y).
template <Scalar T>
RowID<T> row_id_full(const Matrix<T>& y, IdEngine engine = IdEngine::lu);

/// Rank-r row ID read off an existing partial-pivot factorization P Y = L U:
/// J = P[0..r), X = P^T L(:, 0..r) L11^{-1}.
template <Scalar T>
RowID<T> row_id_from_lu(const PivotedLU<T>& f, std::size_t r);

/// max |X_ij|.
template <Scalar T>
double coefficient_magnitude(const RowID<T>& id);

}  // namespace rlu
