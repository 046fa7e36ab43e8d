#include "rlu/rdls.hpp"

namespace rlu {

RdlsSolution solve_rdls(const RealMatrix& a, std::span<const double> b, std::size_t k, std::size_t l,
                        std::uint64_t seed, PivotMode mode) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) throw DimensionError("least squares needs m >= n, got " + shape_string(a));
  if (b.size() != m) {
    throw DimensionError("right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m));
  }

  RdlsSolution sol;
  sol.factors = randomized_lu(a, k, l, seed, mode);
  const LowRankLU<double>& f = sol.factors;

  RealMatrix pb(m, 1);
  for (std::size_t i = 0; i < m; ++i) pb(i, 0) = b[f.P[i]];
  const RealMatrix y = pinv_apply(f.L, pb);

  RealMatrix z1;
  try {
    z1 = triangular_solve_upper(block(f.U, 0, 0, k, k), y);
  } catch (const SingularityError& e) {
    throw SingularityError(std::string(e.what()) + "; try a larger k or a different seed", e.index());
  }

  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) sol.x[f.Q[i]] = z1(i, 0);
  sol.k_used = k;
  sol.nonzero_count = static_cast<std::size_t>(std::count_if(sol.x.begin(), sol.x.end(), [](double v) { return v != 0.0; }));

  const std::vector<double> ax = matvec(a, std::span<const double>(sol.x));
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) s += (ax[i] - b[i]) * (ax[i] - b[i]);
  sol.residual_norm = std::sqrt(s);
  return sol;
}

}  // namespace rlu
