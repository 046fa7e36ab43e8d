#include "rlu/qr.hpp"

#include <cmath>

namespace rlu {
namespace {

template <Scalar T>
T phase_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x < 0.0 ? -1.0 : 1.0;
  } else {
    const double mag = std::abs(x);
    return mag == 0.0 ? cplx(1.0) : x / mag;
  }
}

// Columns of A are stored as rows of `w` so every reflector touches contiguous memory.
template <Scalar T>
QRResult<T> factor(const Matrix<T>& a, bool pivot, double rank_tol) {
  const std::size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  Matrix<T> w = transpose(a);
  Permutation perm(n);
  std::vector<T> taus(r, T{});
  const double threshold = rank_tol * frobenius_norm(a);

  for (std::size_t j = 0; j < r; ++j) {
    if (pivot) {
      std::size_t best_col = j;
      double best = -1.0;
      for (std::size_t c = j; c < n; ++c) {
        const auto col = w.row(c);
        double s = 0.0;
        for (std::size_t i = j; i < m; ++i) s += abs2(col[i]);
        if (s > best) {
          best = s;
          best_col = c;
        }
      }
      if (best_col != j) {
        w.swap_rows(j, best_col);
        perm.swap(j, best_col);
      }
    }

    auto v = w.row(j);
    double tail = 0.0;
    for (std::size_t i = j + 1; i < m; ++i) tail += abs2(v[i]);
    const T alpha = v[j];
    if (tail == 0.0 && (std::is_same_v<T, double> || std::imag(cplx(alpha)) == 0.0)) continue;

    const double norm = std::sqrt(abs2(alpha) + tail);
    const T beta = -phase_of(alpha) * norm;
    const T tau = (beta - alpha) / beta;
    const T scale = T{1} / (alpha - beta);
    for (std::size_t i = j + 1; i < m; ++i) v[i] *= scale;
    v[j] = beta;
    taus[j] = tau;

    // A_c <- H^H A_c with H = I - tau v v^H, v[j] = 1 implicit.
    const T ctau = conj(tau);
    for (std::size_t c = j + 1; c < n; ++c) {
      auto col = w.row(c);
      T s = col[j];
      for (std::size_t i = j + 1; i < m; ++i) s += conj(v[i]) * col[i];
      s *= ctau;
      col[j] -= s;
      for (std::size_t i = j + 1; i < m; ++i) col[i] -= s * v[i];
    }
  }

  QRResult<T> out;
  out.R = Matrix<T>(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = i; c < n; ++c) out.R(i, c) = w(c, i);

  // Q = H_0 H_1 ... H_{r-1} applied to the first r columns of the identity.
  Matrix<T> qt(r, m);
  for (std::size_t c = 0; c < r; ++c) qt(c, c) = T{1};
  for (std::size_t jj = r; jj-- > 0;) {
    if (taus[jj] == T{}) continue;
    const auto v = w.row(jj);
    for (std::size_t c = jj; c < r; ++c) {
      auto col = qt.row(c);
      T s = col[jj];
      for (std::size_t i = jj + 1; i < m; ++i) s += conj(v[i]) * col[i];
      s *= taus[jj];
      col[jj] -= s;
      for (std::size_t i = jj + 1; i < m; ++i) col[i] -= s * v[i];
    }
  }
  out.Q = transpose(qt);
  out.col_perm = std::move(perm);
  std::size_t rank = 0;
  while (rank < r && std::sqrt(abs2(out.R(rank, rank))) > threshold) ++rank;
  out.rank_detected = rank;
  return out;
}

}  // namespace

template <Scalar T>
QRResult<T> householder_qr(const Matrix<T>& a, double rank_tol) {
  return factor(a, false, rank_tol);
}

template <Scalar T>
QRResult<T> pivoted_qr(const Matrix<T>& a, double rank_tol) {
  return factor(a, true, rank_tol);
}

template QRResult<double> householder_qr<double>(const Matrix<double>&, double);
template QRResult<cplx> householder_qr<cplx>(const Matrix<cplx>&, double);
template QRResult<double> pivoted_qr<double>(const Matrix<double>&, double);
template QRResult<cplx> pivoted_qr<cplx>(const Matrix<cplx>&, double);

}  // namespace rlu
