#include "rlu/randomized_lu.hpp"

namespace rlu {

void check_rank_parameters(std::size_t m, std::size_t n, std::size_t k, std::size_t l) {
  if (k == 0) throw ParameterError("rank k must be at least 1");
  if (k > l) throw ParameterError("rank k = " + std::to_string(k) + " exceeds sketch size l = " + std::to_string(l));
  if (l > std::min(m, n)) {
    throw ParameterError("sketch size l = " + std::to_string(l) + " exceeds min(m, n) = " +
                         std::to_string(std::min(m, n)));
  }
}

LowRankLU<double> randomized_lu(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed,
                                PivotMode mode) {
  check_rank_parameters(a.rows(), a.cols(), k, l);
  if (mode == PivotMode::column) throw ParameterError("the sketch factorization needs partial or complete pivoting");

  LowRankLU<double> out;
  out.k = k;
  out.l = l;
  out.sketch = make_gaussian_sketch(a.cols(), l, seed);

  const RealMatrix y = apply_gaussian(a, out.sketch);
  const PivotedLU<double> fy = lu_factor(y, mode);
  if (fy.rank_detected < k) {
    throw RankDeficiencyError("sketch A G has numerical rank " + std::to_string(fy.rank_detected) +
                                  ", below the requested k = " + std::to_string(k),
                              fy.rank_detected);
  }
  const RealMatrix ly = truncate_lu(fy, k).L;
  const RealMatrix b = pinv_apply(ly, apply_row_perm(fy.row_perm, a));

  const PivotedLU<double> fb = lu_column_pivot(b);
  if (fb.rank_detected < k) {
    throw RankDeficiencyError("projected matrix B has numerical rank " + std::to_string(fb.rank_detected) +
                                  ", below the requested k = " + std::to_string(k),
                              fb.rank_detected);
  }
  out.P = fy.row_perm;
  out.Q = fb.col_perm;
  out.L = multiply_unit_lower(ly, fb.L);
  out.U = fb.U;
  return out;
}

template <Scalar T>
Matrix<T> reconstruct(const LowRankLU<T>& f) {
  const Matrix<T> lu = matmul(f.L, f.U);
  Matrix<T> out(lu.rows(), lu.cols());
  for (std::size_t i = 0; i < lu.rows(); ++i) {
    auto dst = out.row(f.P[i]);
    const auto src = lu.row(i);
    for (std::size_t j = 0; j < lu.cols(); ++j) dst[f.Q[j]] = src[j];
  }
  return out;
}

template <Scalar T>
double approx_error(const LowRankLU<T>& f, const RealMatrix& a, NormKind norm) {
  if (f.P.size() != a.rows() || f.Q.size() != a.cols()) {
    throw DimensionError("factorization of a " + std::to_string(f.P.size()) + "x" + std::to_string(f.Q.size()) +
                         " matrix compared against " + shape_string(a));
  }
  const Matrix<T> diff = apply_col_perm(apply_row_perm(f.P, a), f.Q) - matmul(f.L, f.U);
  return matrix_norm(diff, norm);
}

template <Scalar T>
double relative_error(const LowRankLU<T>& f, const RealMatrix& a, NormKind norm) {
  const double scale = matrix_norm(a, norm);
  const double err = approx_error(f, a, norm);
  return scale == 0.0 ? err : err / scale;
}

template Matrix<double> reconstruct<double>(const LowRankLU<double>&);
template Matrix<cplx> reconstruct<cplx>(const LowRankLU<cplx>&);
template double approx_error<double>(const LowRankLU<double>&, const RealMatrix&, NormKind);
template double approx_error<cplx>(const LowRankLU<cplx>&, const RealMatrix&, NormKind);
template double relative_error<double>(const LowRankLU<double>&, const RealMatrix&, NormKind);
template double relative_error<cplx>(const LowRankLU<cplx>&, const RealMatrix&, NormKind);

RangeBasis range_finder(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed) {
  check_rank_parameters(a.rows(), a.cols(), k, l);
  const RealMatrix y = apply_gaussian(a, make_gaussian_sketch(a.cols(), l, seed));
  const SvdResult s = svd_oracle(y);
  const double floor = kPivotTol * frobenius_norm(y);
  std::size_t rank = 0;
  while (rank < s.singular_values.size() && s.singular_values[rank] > floor) ++rank;
  if (rank < k) {
    throw RankDeficiencyError("sketch A G has numerical rank " + std::to_string(rank) +
                                  ", below the requested k = " + std::to_string(k),
                              rank);
  }
  return {block(s.U, 0, 0, s.U.rows(), k), k, l};
}

SvdBaseline randomized_svd_baseline(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed) {
  const RangeBasis basis = range_finder(a, k, l, seed);
  const SvdResult s = svd_oracle(matmul(transpose(basis.Q_basis), a));
  return {matmul(basis.Q_basis, s.U), s.singular_values, s.V};
}

IdBaseline randomized_id_baseline(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed) {
  check_rank_parameters(a.rows(), a.cols(), k, l);
  const RealMatrix y = apply_gaussian(a, make_gaussian_sketch(a.cols(), l, seed));
  RowID<double> id = row_id(y, k, IdEngine::qr);
  return {std::move(id.J), std::move(id.X)};
}

RealMatrix reconstruct(const SvdBaseline& s) {
  RealMatrix us = s.U;
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t j = 0; j < us.cols(); ++j) us(i, j) *= s.sigma[j];
  return matmul(us, transpose(s.V));
}

RealMatrix reconstruct(const IdBaseline& id, const RealMatrix& a) {
  return matmul(id.X, gather_rows(a, id.J));
}

}  // namespace rlu
