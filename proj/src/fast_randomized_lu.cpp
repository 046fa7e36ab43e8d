#include "rlu/fast_randomized_lu.hpp"

#include <cmath>
#include <sstream>

namespace rlu {

double srft_minimum_sketch(std::size_t n, std::size_t k) {
  if (k < 2) return 0.0;
  const double kd = static_cast<double>(k);
  const double root = std::sqrt(kd) + std::sqrt(8.0 * std::log(kd * static_cast<double>(n)));
  return 4.0 * root * root * std::log(kd);
}

LowRankLU<cplx> fast_randomized_lu(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed,
                                   FastLuPath path) {
  const std::size_t m = a.rows(), n = a.cols();
  check_rank_parameters(m, n, k, l);

  LowRankLU<cplx> out;
  out.k = k;
  out.l = l;
  out.sketch = make_srft_sketch(n, l, seed);
  const double l_min = srft_minimum_sketch(n, k);
  if (static_cast<double>(l) < l_min) {
    std::ostringstream msg;
    msg << "l = " << l << " is below the SRFT regime minimum " << std::ceil(l_min) << " for n = " << n
        << ", k = " << k;
    out.warnings.push_back(msg.str());
  }

  const ComplexMatrix y = apply_srft(a, out.sketch);
  const PivotedLU<cplx> fy = lu_partial_pivot(y);
  const std::size_t r = fy.rank_detected;
  if (r < k) {
    throw RankDeficiencyError("sketch A R has numerical rank " + std::to_string(r) + ", below the requested k = " +
                                  std::to_string(k),
                              r);
  }
  const ComplexMatrix ly = truncate_lu(fy, k).L;

  ComplexMatrix b;
  if (path == FastLuPath::structured) {
    // L_y^+ P X = L_y^+ L(:, 0..r) L11^{-1} = [I_k | L_y^+ L(:, k..r)] L11^{-1}.
    ComplexMatrix head(k, r);
    for (std::size_t i = 0; i < k; ++i) head(i, i) = 1.0;
    if (r > k) {
      const ComplexMatrix extra = pinv_apply(ly, block(fy.L, 0, k, m, r - k));
      for (std::size_t i = 0; i < k; ++i)
        std::copy(extra.row(i).begin(), extra.row(i).end(), head.row(i).begin() + static_cast<std::ptrdiff_t>(k));
    }
    const ComplexMatrix coeff = right_solve_unit_lower(block(fy.L, 0, 0, r, r), head);
    const std::vector<std::size_t> rows(fy.row_perm.forward().begin(),
                                        fy.row_perm.forward().begin() + static_cast<std::ptrdiff_t>(r));
    b = matmul(coeff, gather_rows(a, rows));
  } else {
    const RowID<cplx> id = row_id(y, r, IdEngine::lu);
    const ComplexMatrix xa = matmul(id.X, gather_rows(a, id.J));
    b = pinv_apply(ly, apply_row_perm(fy.row_perm, xa));
  }

  const PivotedLU<cplx> fb = lu_column_pivot(b);
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

}  // namespace rlu
