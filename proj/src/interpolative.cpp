#include "rlu/interpolative.hpp"

#include "rlu/qr.hpp"

namespace rlu {
namespace {

// Given Y^H Π ~ F [T11 T12] with T11 upper triangular (r x r), the skeleton rows are
// J = Π[0..r) and the remaining rows are (T11^{-1} T12)^H Y_J.
template <Scalar T>
RowID<T> assemble(const Permutation& pi, const Matrix<T>& upper, std::size_t m, std::size_t r) {
  const Matrix<T> t11 = block(upper, 0, 0, r, r);
  const Matrix<T> t12 = block(upper, 0, r, r, m - r);
  const Matrix<T> coeff = triangular_solve_upper(t11, t12);  // r x (m - r)

  RowID<T> id;
  id.r = r;
  id.J.assign(pi.forward().begin(), pi.forward().begin() + static_cast<std::ptrdiff_t>(r));
  id.X = Matrix<T>(m, r);
  for (std::size_t i = 0; i < r; ++i) id.X(id.J[i], i) = T{1};
  for (std::size_t t = 0; t < m - r; ++t) {
    auto dst = id.X.row(pi[r + t]);
    for (std::size_t i = 0; i < r; ++i) dst[i] = conj(coeff(i, t));
  }
  return id;
}

void check_rank(std::size_t r, std::size_t m, std::size_t l) {
  if (r == 0) throw ParameterError("ID rank must be at least 1");
  if (r > std::min(m, l)) {
    throw ParameterError("ID rank " + std::to_string(r) + " exceeds min(m, l) for a " + std::to_string(m) + "x" +
                         std::to_string(l) + " matrix");
  }
}

}  // namespace

template <Scalar T>
RowID<T> row_id(const Matrix<T>& y, std::size_t r, IdEngine engine) {
  const std::size_t m = y.rows();
  check_rank(r, m, y.cols());
  const Matrix<T> yh = adjoint(y);
  if (engine == IdEngine::lu) {
    const PivotedLU<T> f = lu_column_pivot(yh);
    if (f.rank_detected < r) {
      throw RankDeficiencyError("row ID of rank " + std::to_string(r) + " requested but only " +
                                    std::to_string(f.rank_detected) + " independent rows were found",
                                f.rank_detected);
    }
    return assemble(f.col_perm, f.U, m, r);
  }
  const QRResult<T> f = pivoted_qr(yh);
  if (f.rank_detected < r) {
    throw RankDeficiencyError("row ID of rank " + std::to_string(r) + " requested but only " +
                                  std::to_string(f.rank_detected) + " independent rows were found",
                              f.rank_detected);
  }
  return assemble(f.col_perm, f.R, m, r);
}

template <Scalar T>
RowID<T> row_id_full(const Matrix<T>& y, IdEngine engine) {
  return row_id(y, y.cols(), engine);
}

template <Scalar T>
RowID<T> row_id_from_lu(const PivotedLU<T>& f, std::size_t r) {
  const std::size_t m = f.L.rows();
  check_rank(r, m, f.L.cols());
  if (r > f.rank_detected) {
    throw RankDeficiencyError("row ID of rank " + std::to_string(r) + " exceeds detected rank " +
                                  std::to_string(f.rank_detected),
                              f.rank_detected);
  }
  const Matrix<T> lr = block(f.L, 0, 0, m, r);
  const Matrix<T> l11 = block(lr, 0, 0, r, r);
  const Matrix<T> scaled = right_solve_unit_lower(l11, lr);  // rows 0..r-1 become I
  RowID<T> id;
  id.r = r;
  id.J.assign(f.row_perm.forward().begin(), f.row_perm.forward().begin() + static_cast<std::ptrdiff_t>(r));
  id.X = Matrix<T>(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    auto dst = id.X.row(f.row_perm[i]);
    if (i < r) {
      dst[i] = T{1};
    } else {
      std::copy(scaled.row(i).begin(), scaled.row(i).end(), dst.begin());
    }
  }
  return id;
}

template <Scalar T>
double coefficient_magnitude(const RowID<T>& id) {
  return max_abs(id.X);
}

#define RLU_INSTANTIATE_ID(T)                                                  \
  template RowID<T> row_id<T>(const Matrix<T>&, std::size_t, IdEngine);        \
  template RowID<T> row_id_full<T>(const Matrix<T>&, IdEngine);                \
  template RowID<T> row_id_from_lu<T>(const PivotedLU<T>&, std::size_t);       \
  template double coefficient_magnitude<T>(const RowID<T>&);

RLU_INSTANTIATE_ID(double)
RLU_INSTANTIATE_ID(cplx)

#undef RLU_INSTANTIATE_ID

}  // namespace rlu
