#include "rlu/lu.hpp"

#include <cmath>

namespace rlu {
namespace {

template <Scalar T>
void pick_in_block(const Matrix<T>& w, std::size_t i, std::size_t& pr, std::size_t& pc) {
  double best = -1.0;
  for (std::size_t t = i; t < w.rows(); ++t) {
    const auto r = w.row(t);
    for (std::size_t j = i; j < w.cols(); ++j) {
      const double v = abs2(r[j]);
      if (v > best) {
        best = v;
        pr = t;
        pc = j;
      }
    }
  }
}

// Unblocked elimination on w (pivot search, row/column swaps, rank-one updates). Leaves the
// multipliers below the diagonal and U on and above it.
template <Scalar T>
void eliminate_unblocked(Matrix<T>& w, PivotMode mode, double threshold, Permutation& rows, Permutation& cols,
                         std::size_t& rank) {
  const std::size_t m = w.rows(), n = w.cols(), r = std::min(m, n);
  bool leading = true;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t pr = i, pc = i;
    switch (mode) {
      case PivotMode::partial: {
        double best = -1.0;
        for (std::size_t t = i; t < m; ++t) {
          const double v = abs2(w(t, i));
          if (v > best) {
            best = v;
            pr = t;
          }
        }
        break;
      }
      case PivotMode::column: {
        double best = -1.0;
        const auto ri = w.row(i);
        for (std::size_t j = i; j < n; ++j) {
          const double v = abs2(ri[j]);
          if (v > best) {
            best = v;
            pc = j;
          }
        }
        if (best == 0.0) pick_in_block(w, i, pr, pc);
        break;
      }
      case PivotMode::complete:
        pick_in_block(w, i, pr, pc);
        break;
    }
    if (pr != i) {
      w.swap_rows(i, pr);
      rows.swap(i, pr);
    }
    if (pc != i) {
      w.swap_cols(i, pc);
      cols.swap(i, pc);
    }

    const T pivot = w(i, i);
    if (leading && std::sqrt(abs2(pivot)) > threshold) {
      ++rank;
    } else {
      leading = false;
    }
    if (pivot == T{}) continue;  // whole column below is zero as well

    const T inv = T{1} / pivot;
    const T* __restrict pivot_row = w.row(i).data();
    for (std::size_t t = i + 1; t < m; ++t) {
      T* __restrict row = w.row(t).data();
      const T mult = row[i] * inv;
      row[i] = mult;
      if (mult == T{}) continue;
      for (std::size_t j = i + 1; j < n; ++j) row[j] -= mult * pivot_row[j];
    }
  }
}

// Partial pivoting in column panels. Every entry receives its updates in the same order as
// in the unblocked loop, so the result is bitwise identical; only memory traffic changes.
// Returns false if an exactly zero pivot was met.
template <Scalar T>
bool eliminate_partial_blocked(Matrix<T>& w, double threshold, Permutation& rows, std::size_t& rank) {
  constexpr std::size_t kPanel = 32;
  constexpr std::size_t kChunk = 256;
  const std::size_t m = w.rows(), n = w.cols(), r = std::min(m, n);
  bool leading = true, nonzero = true;
  for (std::size_t j0 = 0; j0 < r; j0 += kPanel) {
    const std::size_t j1 = std::min(r, j0 + kPanel);
    for (std::size_t i = j0; i < j1; ++i) {
      std::size_t pr = i;
      double best = -1.0;
      for (std::size_t t = i; t < m; ++t) {
        const double v = abs2(w(t, i));
        if (v > best) {
          best = v;
          pr = t;
        }
      }
      if (pr != i) {
        w.swap_rows(i, pr);
        rows.swap(i, pr);
      }
      const T pivot = w(i, i);
      if (leading && std::sqrt(abs2(pivot)) > threshold) {
        ++rank;
      } else {
        leading = false;
      }
      if (pivot == T{}) {
        nonzero = false;
        continue;
      }
      const T inv = T{1} / pivot;
      const T* __restrict pivot_row = w.row(i).data();
      for (std::size_t t = i + 1; t < m; ++t) {
        T* __restrict row = w.row(t).data();
        const T mult = row[i] * inv;
        row[i] = mult;
        if (mult == T{}) continue;
        for (std::size_t j = i + 1; j < j1; ++j) row[j] -= mult * pivot_row[j];
      }
    }
    if (j1 >= n) continue;

    // Block row of U to the right of the panel.
    for (std::size_t i = j0 + 1; i < j1; ++i) {
      T* __restrict row = w.row(i).data();
      for (std::size_t p = j0; p < i; ++p) {
        const T lip = row[p];
        if (lip == T{}) continue;
        const T* __restrict up = w.row(p).data();
        for (std::size_t c = j1; c < n; ++c) row[c] -= lip * up[c];
      }
    }
    // Trailing update, chunked over columns so the block row stays in cache.
    for (std::size_t c0 = j1; c0 < n; c0 += kChunk) {
      const std::size_t c1 = std::min(n, c0 + kChunk);
      for (std::size_t t = j1; t < m; ++t) {
        T* __restrict row = w.row(t).data();
        for (std::size_t p = j0; p < j1; ++p) {
          const T ltp = row[p];
          if (ltp == T{}) continue;
          const T* __restrict up = w.row(p).data();
          for (std::size_t c = c0; c < c1; ++c) row[c] -= ltp * up[c];
        }
      }
    }
  }
  return nonzero;
}

template <Scalar T>
PivotedLU<T> extract(const Matrix<T>& w, Permutation rows, Permutation cols, std::size_t rank) {
  const std::size_t m = w.rows(), n = w.cols(), r = std::min(m, n);
  PivotedLU<T> f;
  f.row_perm = std::move(rows);
  f.col_perm = std::move(cols);
  f.L = Matrix<T>(m, r);
  f.U = Matrix<T>(r, n);
  for (std::size_t t = 0; t < m; ++t) {
    const auto src = w.row(t);
    auto dst = f.L.row(t);
    const std::size_t lim = std::min(t, r);
    for (std::size_t j = 0; j < lim; ++j) dst[j] = src[j];
    if (t < r) dst[t] = T{1};
  }
  for (std::size_t t = 0; t < r; ++t) {
    const auto src = w.row(t);
    auto dst = f.U.row(t);
    for (std::size_t j = t; j < n; ++j) dst[j] = src[j];
  }
  f.rank_detected = rank;
  return f;
}

template <Scalar T>
PivotedLU<T> eliminate(const Matrix<T>& a, PivotMode mode, double pivot_tol) {
  const std::size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  const double threshold = pivot_tol * frobenius_norm(a);
  std::size_t rank = 0;

  if (mode == PivotMode::partial) {
    Matrix<T> w = a;
    Permutation rows(m);
    eliminate_partial_blocked(w, threshold, rows, rank);
    return extract(w, std::move(rows), Permutation(n), rank);
  }

  if (mode == PivotMode::column) {
    // Greedy column pivoting on A is partial pivoting on A^T: A^T Q = L' U' gives
    // A Q = (U'^T D^{-1}) (D L'^T) with D = diag(U').
    Matrix<T> wt = transpose(a);
    Permutation cols(n);
    if (eliminate_partial_blocked(wt, threshold, cols, rank)) {
      const Matrix<T> w = transpose(wt);
      PivotedLU<T> f;
      f.row_perm = Permutation(m);
      f.col_perm = std::move(cols);
      f.L = Matrix<T>(m, r);
      f.U = Matrix<T>(r, n);
      std::vector<T> inv(r);
      for (std::size_t j = 0; j < r; ++j) inv[j] = T{1} / w(j, j);
      for (std::size_t i = 0; i < m; ++i) {
        const auto src = w.row(i);
        auto dst = f.L.row(i);
        const std::size_t lim = std::min(i, r);
        for (std::size_t j = 0; j < lim; ++j) dst[j] = src[j] * inv[j];
        if (i < r) dst[i] = T{1};
      }
      for (std::size_t j = 0; j < r; ++j) {
        const auto src = w.row(j);
        auto dst = f.U.row(j);
        const T d = src[j];
        dst[j] = d;
        for (std::size_t c = j + 1; c < n; ++c) dst[c] = d * src[c];
      }
      f.rank_detected = rank;
      return f;
    }
    rank = 0;  // an exactly zero pivot row needs the row-swap fallback below
  }

  Matrix<T> w = a;
  Permutation rows(m), cols(n);
  eliminate_unblocked(w, mode, threshold, rows, cols, rank);
  return extract(w, std::move(rows), std::move(cols), rank);
}

}  // namespace

template <Scalar T>
PivotedLU<T> lu_partial_pivot(const Matrix<T>& a, double pivot_tol) {
  return eliminate(a, PivotMode::partial, pivot_tol);
}

template <Scalar T>
PivotedLU<T> lu_column_pivot(const Matrix<T>& a, double pivot_tol) {
  return eliminate(a, PivotMode::column, pivot_tol);
}

template <Scalar T>
PivotedLU<T> lu_complete_pivot(const Matrix<T>& a, double pivot_tol) {
  return eliminate(a, PivotMode::complete, pivot_tol);
}

template <Scalar T>
PivotedLU<T> lu_factor(const Matrix<T>& a, PivotMode mode, double pivot_tol) {
  return eliminate(a, mode, pivot_tol);
}

template <Scalar T>
TruncatedLU<T> truncate_lu(const PivotedLU<T>& f, std::size_t k) {
  if (k == 0) throw ParameterError("truncation rank k must be at least 1");
  if (k > f.rank_detected) {
    throw RankDeficiencyError("requested rank " + std::to_string(k) + " exceeds detected rank " +
                                  std::to_string(f.rank_detected),
                              f.rank_detected);
  }
  return {block(f.L, 0, 0, f.L.rows(), k), block(f.U, 0, 0, k, f.U.cols())};
}

template <Scalar T>
Matrix<T> triangular_solve_lower(const Matrix<T>& l, const Matrix<T>& b, Diagonal diag) {
  const std::size_t k = l.rows();
  if (l.cols() != k) throw DimensionError("triangular_solve_lower needs a square matrix, got " + shape_string(l));
  if (b.rows() != k) throw DimensionError("triangular_solve_lower: rhs " + shape_string(b) + " vs " + shape_string(l));
  const double tiny = 1e-14 * frobenius_norm(l);
  Matrix<T> x = b;
  for (std::size_t i = 0; i < k; ++i) {
    auto xi = x.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      const T lij = l(i, j);
      if (lij == T{}) continue;
      const auto xj = x.row(j);
      for (std::size_t c = 0; c < xi.size(); ++c) xi[c] -= lij * xj[c];
    }
    if (diag == Diagonal::general) {
      const T d = l(i, i);
      if (std::sqrt(abs2(d)) <= tiny) {
        throw SingularityError("lower-triangular matrix is singular at index " + std::to_string(i), i);
      }
      for (auto& v : xi) v /= d;
    }
  }
  return x;
}

template <Scalar T>
Matrix<T> triangular_solve_upper(const Matrix<T>& u, const Matrix<T>& b) {
  const std::size_t k = u.rows();
  if (u.cols() != k) throw DimensionError("triangular_solve_upper needs a square matrix, got " + shape_string(u));
  if (b.rows() != k) throw DimensionError("triangular_solve_upper: rhs " + shape_string(b) + " vs " + shape_string(u));
  const double tiny = 1e-14 * frobenius_norm(u);
  for (std::size_t i = 0; i < k; ++i) {
    if (std::sqrt(abs2(u(i, i))) <= tiny) {
      throw SingularityError("upper-triangular matrix is singular at index " + std::to_string(i), i);
    }
  }
  Matrix<T> x = b;
  for (std::size_t ii = k; ii-- > 0;) {
    auto xi = x.row(ii);
    for (std::size_t j = ii + 1; j < k; ++j) {
      const T uij = u(ii, j);
      if (uij == T{}) continue;
      const auto xj = x.row(j);
      for (std::size_t c = 0; c < xi.size(); ++c) xi[c] -= uij * xj[c];
    }
    const T inv = T{1} / u(ii, ii);
    for (auto& v : xi) v *= inv;
  }
  return x;
}

template <Scalar T>
Matrix<T> right_solve_unit_lower(const Matrix<T>& l, const Matrix<T>& b) {
  const std::size_t r = l.rows();
  if (l.cols() != r || b.cols() != r) {
    throw DimensionError("right_solve_unit_lower: " + shape_string(b) + " * inv(" + shape_string(l) + ")");
  }
  Matrix<T> x = b;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    T* __restrict xi = x.row(i).data();
    for (std::size_t t = r; t-- > 1;) {
      const T xt = xi[t];
      if (xt == T{}) continue;
      const T* __restrict lt = l.row(t).data();
      for (std::size_t j = 0; j < t; ++j) xi[j] -= xt * lt[j];
    }
  }
  return x;
}

template <Scalar T>
Matrix<T> gram(const Matrix<T>& l) {
  constexpr std::size_t kRowBlock = 64;
  const std::size_t k = l.cols();
  Matrix<T> g(k, k);
  for (std::size_t r0 = 0; r0 < l.rows(); r0 += kRowBlock) {
    const std::size_t r1 = std::min(l.rows(), r0 + kRowBlock);
    for (std::size_t i = 0; i < k; ++i) {
      T* __restrict gi = g.row(i).data();
      for (std::size_t r = r0; r < r1; ++r) {
        const T* __restrict lr = l.row(r).data();
        const T ci = conj(lr[i]);
        if (ci == T{}) continue;
        for (std::size_t j = i; j < k; ++j) gi[j] += ci * lr[j];
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) g(i, j) = conj(g(j, i));
    // Fused multiply-adds can leave rounding residue in the imaginary part.
    if constexpr (std::is_same_v<T, cplx>) g(i, i) = g(i, i).real();
  }
  return g;
}

template <Scalar T>
Matrix<T> multiply_unit_lower(const Matrix<T>& a, const Matrix<T>& l) {
  const std::size_t k = l.rows();
  if (l.cols() != k || a.cols() != k) {
    throw DimensionError("multiply_unit_lower: " + shape_string(a) + " * " + shape_string(l));
  }
  Matrix<T> c = a;
  const std::size_t m = a.rows();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const T* a0 = a.row(i).data();
    const T* a1 = a.row(i + 1).data();
    const T* a2 = a.row(i + 2).data();
    const T* a3 = a.row(i + 3).data();
    T* __restrict c0 = c.row(i).data();
    T* __restrict c1 = c.row(i + 1).data();
    T* __restrict c2 = c.row(i + 2).data();
    T* __restrict c3 = c.row(i + 3).data();
    for (std::size_t p = 1; p < k; ++p) {
      const T* __restrict lp = l.row(p).data();
      const T v0 = a0[p], v1 = a1[p], v2 = a2[p], v3 = a3[p];
      for (std::size_t j = 0; j < p; ++j) {
        const T x = lp[j];
        c0[j] += v0 * x;
        c1[j] += v1 * x;
        c2[j] += v2 * x;
        c3[j] += v3 * x;
      }
    }
  }
  for (; i < m; ++i) {
    const T* ai = a.row(i).data();
    T* __restrict ci = c.row(i).data();
    for (std::size_t p = 1; p < k; ++p) {
      const T* __restrict lp = l.row(p).data();
      const T v = ai[p];
      for (std::size_t j = 0; j < p; ++j) ci[j] += v * lp[j];
    }
  }
  return c;
}

template <Scalar T>
Matrix<T> solve_square(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols()) throw DimensionError("solve_square needs a square matrix, got " + shape_string(a));
  if (b.rows() != a.rows()) throw DimensionError("solve_square: rhs " + shape_string(b) + " vs " + shape_string(a));
  const PivotedLU<T> f = lu_partial_pivot(a);
  const Matrix<T> y = triangular_solve_lower(f.L, apply_row_perm(f.row_perm, b), Diagonal::unit);
  return triangular_solve_upper(f.U, y);
}

template <Scalar T>
Matrix<T> pinv_apply(const Matrix<T>& l, const Matrix<T>& b) {
  if (b.rows() != l.rows()) throw DimensionError("pinv_apply: " + shape_string(l) + " vs rhs " + shape_string(b));
  const Matrix<T> g = gram(l);
  const Matrix<T> rhs = matmul(adjoint(l), b);
  try {
    return solve_square(g, rhs);
  } catch (const SingularityError& e) {
    throw SingularityError("Gram matrix L^H L is numerically singular (ill-conditioned L): " + std::string(e.what()),
                           e.index());
  }
}

template <Scalar T>
Matrix<T> pinv_trapezoidal(const Matrix<T>& l) {
  const Matrix<T> g = gram(l);
  try {
    return solve_square(g, adjoint(l));
  } catch (const SingularityError& e) {
    throw SingularityError("Gram matrix L^H L is numerically singular (ill-conditioned L): " + std::string(e.what()),
                           e.index());
  }
}

#define RLU_INSTANTIATE_LU(T)                                                                      \
  template PivotedLU<T> lu_partial_pivot<T>(const Matrix<T>&, double);                             \
  template PivotedLU<T> lu_column_pivot<T>(const Matrix<T>&, double);                              \
  template PivotedLU<T> lu_complete_pivot<T>(const Matrix<T>&, double);                            \
  template PivotedLU<T> lu_factor<T>(const Matrix<T>&, PivotMode, double);                         \
  template TruncatedLU<T> truncate_lu<T>(const PivotedLU<T>&, std::size_t);                        \
  template Matrix<T> triangular_solve_lower<T>(const Matrix<T>&, const Matrix<T>&, Diagonal);      \
  template Matrix<T> triangular_solve_upper<T>(const Matrix<T>&, const Matrix<T>&);                \
  template Matrix<T> right_solve_unit_lower<T>(const Matrix<T>&, const Matrix<T>&);                \
  template Matrix<T> gram<T>(const Matrix<T>&);                                                    \
  template Matrix<T> multiply_unit_lower<T>(const Matrix<T>&, const Matrix<T>&);                   \
  template Matrix<T> solve_square<T>(const Matrix<T>&, const Matrix<T>&);                          \
  template Matrix<T> pinv_apply<T>(const Matrix<T>&, const Matrix<T>&);                            \
  template Matrix<T> pinv_trapezoidal<T>(const Matrix<T>&);

RLU_INSTANTIATE_LU(double)
RLU_INSTANTIATE_LU(cplx)

#undef RLU_INSTANTIATE_LU

}  // namespace rlu
