#pragma once

#include "rlu/matrix.hpp"
#include "rlu/permutation.hpp"

namespace rlu {

/// A Π = Q R with Q (m x r) having orthonormal columns and R (r x n) upper trapezoidal,
/// r = min(m, n). Π is the identity unless column pivoting was requested.
template <Scalar T>
struct QRResult {
  Matrix<T> Q;
  Matrix<T> R;
  Permutation col_perm;
  /// Leading run of |R_ii| > tol * ||A||_F.
  std::size_t rank_detected = 0;
};

/// Thin Householder QR.
template <Scalar T>
QRResult<T> householder_qr(const Matrix<T>& a, double rank_tol = 1e-12);

/// Householder QR with greedy column pivoting on the largest remaining column norm.
template <Scalar T>
QRResult<T> pivoted_qr(const Matrix<T>& a, double rank_tol = 1e-12);

}  // namespace rlu
