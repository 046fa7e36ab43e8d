#pragma once

#include <span>

#include "rlu/matrix.hpp"
#include "rlu/permutation.hpp"

namespace rlu {

enum class PivotMode {
  partial,   ///< row pivoting on the largest entry of the current column
  column,    ///< column pivoting on the largest entry of the current row
  complete,  ///< largest entry of the whole trailing block, rows and columns
};

/// Relative threshold (against ||A||_F) below which a pivot counts as numerically zero.
inline constexpr double kPivotTol = 1e-12;

/// P A Q = L U with L (m x r) unit lower trapezoidal and U (r x n) upper trapezoidal,
/// r = min(m, n).
template <Scalar T>
struct PivotedLU {
  Permutation row_perm;
  Permutation col_perm;
  Matrix<T> L;
  Matrix<T> U;
  /// Length of the leading run of pivots with |pivot| > pivot_tol * ||A||_F.
  std::size_t rank_detected = 0;
};

template <Scalar T>
PivotedLU<T> lu_partial_pivot(const Matrix<T>& a, double pivot_tol = kPivotTol);

/// Greedy column pivoting. Rows are only exchanged when the current row of the trailing
/// block is exactly zero; otherwise row_perm stays the identity.
template <Scalar T>
PivotedLU<T> lu_column_pivot(const Matrix<T>& a, double pivot_tol = kPivotTol);

template <Scalar T>
PivotedLU<T> lu_complete_pivot(const Matrix<T>& a, double pivot_tol = kPivotTol);

template <Scalar T>
PivotedLU<T> lu_factor(const Matrix<T>& a, PivotMode mode, double pivot_tol = kPivotTol);

template <Scalar T>
struct TruncatedLU {
  Matrix<T> L;  ///< m x k
  Matrix<T> U;  ///< k x n
};

/// First k columns of L and first k rows of U. Throws RankDeficiencyError when
/// k > rank_detected.
template <Scalar T>
TruncatedLU<T> truncate_lu(const PivotedLU<T>& f, std::size_t k);

enum class Diagonal { unit, general };

/// Solves L X = B by forward substitution. With Diagonal::unit the stored diagonal is
/// ignored and taken as one.
template <Scalar T>
Matrix<T> triangular_solve_lower(const Matrix<T>& l, const Matrix<T>& b, Diagonal diag = Diagonal::unit);

/// Solves U X = B by back substitution. Throws SingularityError naming the first index with
/// |U_ii| <= 1e-14 ||U||_F.
template <Scalar T>
Matrix<T> triangular_solve_upper(const Matrix<T>& u, const Matrix<T>& b);

/// Solves X L = B for unit lower-triangular L (i.e. X = B L^{-1}).
template <Scalar T>
Matrix<T> right_solve_unit_lower(const Matrix<T>& l, const Matrix<T>& b);

/// L^H L, computed on the upper triangle and mirrored.
template <Scalar T>
Matrix<T> gram(const Matrix<T>& l);

/// A L for unit lower-triangular L (k x k); only the strictly lower part of L is read.
template <Scalar T>
Matrix<T> multiply_unit_lower(const Matrix<T>& a, const Matrix<T>& l);

/// Solves the square system A X = B with partial pivoting.
template <Scalar T>
Matrix<T> solve_square(const Matrix<T>& a, const Matrix<T>& b);

/// (L^H L)^{-1} L^H B without forming the pseudoinverse. The Gram matrix is factored by its
/// own pivoted LU; throws SingularityError when it is numerically singular.
template <Scalar T>
Matrix<T> pinv_apply(const Matrix<T>& l, const Matrix<T>& b);

/// (L^H L)^{-1} L^H for a full-column-rank L (m x k); result is k x m.
template <Scalar T>
Matrix<T> pinv_trapezoidal(const Matrix<T>& l);

}  // namespace rlu
