#include "rlu/svd.hpp"

#include <cmath>
#include <numeric>

namespace rlu {
namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i], yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

// Replace the rows of `basis` flagged in `fill` by unit vectors orthogonal to all others.
void complete_orthonormal(RealMatrix& basis, const std::vector<bool>& fill) {
  const std::size_t r = basis.rows(), m = basis.cols();
  std::vector<bool> done(r);
  for (std::size_t i = 0; i < r; ++i) done[i] = !fill[i];
  for (std::size_t i = 0; i < r; ++i) {
    if (done[i]) continue;
    std::vector<double> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < m && best_norm < 0.5; ++e) {
      std::vector<double> v(m, 0.0);
      v[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!done[j]) continue;
          const auto q = basis.row(j);
          const double proj = dot(q, v);
          for (std::size_t t = 0; t < m; ++t) v[t] -= proj * q[t];
        }
      }
      const double nv = std::sqrt(dot(v, v));
      if (nv > best_norm) {
        best_norm = nv;
        best = std::move(v);
      }
    }
    auto dst = basis.row(i);
    for (std::size_t t = 0; t < m; ++t) dst[t] = best[t] / best_norm;
    done[i] = true;
  }
}

// Tall case m >= n. Columns of A live in the rows of w.
SvdResult jacobi_tall(const RealMatrix& a, const SvdOptions& opts) {
  const std::size_t m = a.rows(), n = a.cols();
  RealMatrix w = transpose(a);
  RealMatrix vt = RealMatrix::identity(n);
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = dot(w.row(j), w.row(j));

  double worst = 0.0;
  bool converged = n < 2;
  for (std::size_t sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    worst = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = norms[p], beta = norms[q];
        if (alpha == 0.0 || beta == 0.0) continue;
        const double gamma = dot(w.row(p), w.row(q));
        const double ratio = std::abs(gamma) / std::sqrt(alpha * beta);
        worst = std::max(worst, ratio);
        if (ratio <= 1e-15) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(w.row(p), w.row(q), c, s);
        rotate(vt.row(p), vt.row(q), c, s);
        norms[p] = dot(w.row(p), w.row(p));
        norms[q] = dot(w.row(q), w.row(q));
      }
    }
    converged = worst <= opts.tol;
  }
  if (!converged) {
    throw ConvergenceError("Jacobi SVD did not converge in " + std::to_string(opts.max_sweeps) +
                               " sweeps (largest off-diagonal cosine " + std::to_string(worst) + ")",
                           worst);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(norms[j]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  const double sigma_max = sigma[order[0]];
  RealMatrix ut(n, m);
  RealMatrix vt_sorted(n, n);
  std::vector<bool> fill(n, false);
  SvdResult out;
  out.singular_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = order[i];
    out.singular_values[i] = sigma[j];
    std::copy(vt.row(j).begin(), vt.row(j).end(), vt_sorted.row(i).begin());
    if (sigma[j] == 0.0 || sigma[j] <= 1e-300 * std::max(1.0, sigma_max)) {
      fill[i] = true;
      continue;
    }
    const auto src = w.row(j);
    auto dst = ut.row(i);
    for (std::size_t t = 0; t < m; ++t) dst[t] = src[t] / sigma[j];
  }
  if (std::find(fill.begin(), fill.end(), true) != fill.end()) complete_orthonormal(ut, fill);
  out.U = transpose(ut);
  out.V = transpose(vt_sorted);
  return out;
}

}  // namespace

SvdResult svd_oracle(const RealMatrix& a, const SvdOptions& opts) {
  if (a.empty()) throw DimensionError("svd_oracle needs a nonempty matrix");
  if (std::min(a.rows(), a.cols()) > opts.max_dimension) {
    throw ParameterError("svd_oracle is limited to min(m, n) <= " + std::to_string(opts.max_dimension) + ", got " +
                         shape_string(a));
  }
  if (a.rows() >= a.cols()) return jacobi_tall(a, opts);
  SvdResult t = jacobi_tall(transpose(a), opts);
  std::swap(t.U, t.V);
  return t;
}

RealMatrix truncated_reconstruction(const SvdResult& s, std::size_t k) {
  if (k > s.singular_values.size()) throw ParameterError("truncation rank exceeds the number of singular values");
  RealMatrix us(s.U.rows(), k);
  for (std::size_t i = 0; i < us.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) us(i, j) = s.U(i, j) * s.singular_values[j];
  return matmul(us, transpose(block(s.V, 0, 0, s.V.rows(), k)));
}

}  // namespace rlu
