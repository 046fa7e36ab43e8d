#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "rlu/errors.hpp"

namespace rlu {

using cplx = std::complex<double>;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, cplx>;

enum class ScalarKind : std::uint8_t { real64 = 0, complex128 = 1 };

template <Scalar T>
constexpr ScalarKind scalar_kind_of() {
  return std::is_same_v<T, double> ? ScalarKind::real64 : ScalarKind::complex128;
}

/// real x complex -> complex, otherwise the common type.
template <Scalar A, Scalar B>
using promote_t = std::conditional_t<std::is_same_v<A, cplx> || std::is_same_v<B, cplx>, cplx, double>;

inline double conj(double x) { return x; }
inline cplx conj(const cplx& z) { return std::conj(z); }

/// Squared magnitude; used for pivot comparisons.
inline double abs2(double x) { return x * x; }
inline double abs2(const cplx& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Dense row-major matrix of real or complex doubles. No strides, no views.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data length " + std::to_string(data_.size()) + " does not equal " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged initializer list");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) { return identity(n, n); }
  static Matrix identity(std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) out(i, i) = T{1};
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }
  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
  }
  void swap_cols(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cplx>;

template <Scalar T>
std::string shape_string(const Matrix<T>& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

template <Scalar T>
bool all_finite(const Matrix<T>& a) {
  return std::all_of(a.values().begin(), a.values().end(), [](const T& x) { return is_finite(x); });
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Conjugate transpose (plain transpose for real matrices).
template <Scalar T>
Matrix<T> adjoint(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  std::transform(a.values().begin(), a.values().end(), out.values().begin(), [](double x) { return cplx(x, 0.0); });
  return out;
}
inline const ComplexMatrix& to_complex(const ComplexMatrix& a) { return a; }

inline RealMatrix real_part(const ComplexMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  std::transform(a.values().begin(), a.values().end(), out.values().begin(), [](const cplx& z) { return z.real(); });
  return out;
}
inline RealMatrix imag_part(const ComplexMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  std::transform(a.values().begin(), a.values().end(), out.values().begin(), [](const cplx& z) { return z.imag(); });
  return out;
}

/// re + i im, entrywise.
inline ComplexMatrix combine_parts(const RealMatrix& re, const RealMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) throw DimensionError("combine_parts shape mismatch");
  ComplexMatrix out(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.size(); ++i) out.data()[i] = cplx(re.data()[i], im.data()[i]);
  return out;
}

/// Copy of the block starting at (r0, c0) with the given extent.
template <Scalar T>
Matrix<T> block(const Matrix<T>& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) {
    throw DimensionError("block exceeds " + shape_string(a));
  }
  Matrix<T> out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) std::copy_n(a.row(r0 + i).begin() + c0, nc, out.row(i).begin());
  return out;
}

/// out[i] = a[idx[i]]
template <Scalar T>
Matrix<T> gather_rows(const Matrix<T>& a, std::span<const std::size_t> idx) {
  Matrix<T> out(idx.size(), a.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= a.rows()) throw DimensionError("row index out of range");
    std::copy(a.row(idx[i]).begin(), a.row(idx[i]).end(), out.row(i).begin());
  }
  return out;
}

/// out[:, j] = a[:, idx[j]]
template <Scalar T>
Matrix<T> gather_cols(const Matrix<T>& a, std::span<const std::size_t> idx) {
  for (std::size_t j : idx)
    if (j >= a.cols()) throw DimensionError("column index out of range");
  Matrix<T> out(a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto src = a.row(i);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < idx.size(); ++j) dst[j] = src[idx[j]];
  }
  return out;
}

template <Scalar A, Scalar B>
Matrix<promote_t<A, B>> operator-(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("subtract " + shape_string(a) + " - " + shape_string(b));
  }
  Matrix<promote_t<A, B>> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = promote_t<A, B>(a.data()[i]) - b.data()[i];
  return out;
}

template <Scalar A, Scalar B>
Matrix<promote_t<A, B>> operator+(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("add " + shape_string(a) + " + " + shape_string(b));
  }
  Matrix<promote_t<A, B>> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) out.data()[i] = promote_t<A, B>(a.data()[i]) + b.data()[i];
  return out;
}

template <Scalar T>
Matrix<T> operator*(T s, Matrix<T> a) {
  for (auto& x : a.values()) x *= s;
  return a;
}

template <Scalar T>
double frobenius_norm(const Matrix<T>& a) {
  // Scaled accumulation so huge or tiny entries do not overflow the sum of squares.
  double scale = 0.0;
  for (const T& x : a.values()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (const T& x : a.values()) sum += abs2(x / scale);
  return scale * std::sqrt(sum);
}

template <Scalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const T& x : a.values()) m = std::max(m, std::abs(x));
  return m;
}

namespace detail {

// Row-block of C += A(rows i0..i0+4, p0..p1) * B(p0..p1, j0..j1). Summation order over p is
// ascending for every entry, so the blocked product equals the plain triple loop bit for bit.
template <Scalar TA, Scalar TB, Scalar TC>
void matmul_panel(const Matrix<TA>& a, const Matrix<TB>& b, Matrix<TC>& c, std::size_t i0, std::size_t ni,
                  std::size_t p0, std::size_t p1, std::size_t j0, std::size_t j1) {
  const std::size_t nj = j1 - j0;
  if (ni == 4) {
    TC* c0 = c.row(i0).data() + j0;
    TC* c1 = c.row(i0 + 1).data() + j0;
    TC* c2 = c.row(i0 + 2).data() + j0;
    TC* c3 = c.row(i0 + 3).data() + j0;
    for (std::size_t p = p0; p < p1; ++p) {
      const TA a0 = a(i0, p), a1 = a(i0 + 1, p), a2 = a(i0 + 2, p), a3 = a(i0 + 3, p);
      const TB* bp = b.row(p).data() + j0;
      for (std::size_t j = 0; j < nj; ++j) {
        const TB bv = bp[j];
        c0[j] += a0 * bv;
        c1[j] += a1 * bv;
        c2[j] += a2 * bv;
        c3[j] += a3 * bv;
      }
    }
    return;
  }
  for (std::size_t i = i0; i < i0 + ni; ++i) {
    TC* ci = c.row(i).data() + j0;
    for (std::size_t p = p0; p < p1; ++p) {
      const TA av = a(i, p);
      const TB* bp = b.row(p).data() + j0;
      for (std::size_t j = 0; j < nj; ++j) ci[j] += av * bp[j];
    }
  }
}

}  // namespace detail

/// Dense product with real x complex promotion. Cache-blocked; deterministic.
template <Scalar TA, Scalar TB>
Matrix<promote_t<TA, TB>> matmul(const Matrix<TA>& a, const Matrix<TB>& b) {
  using TC = promote_t<TA, TB>;
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul " + shape_string(a) + " * " + shape_string(b));
  }
  if constexpr (std::is_same_v<TA, cplx> && std::is_same_v<TB, double>) {
    // (ar + i ai) b as two real products: same operations, same order, real-speed kernel.
    return combine_parts(matmul(real_part(a), b), matmul(imag_part(a), b));
  } else if constexpr (std::is_same_v<TA, double> && std::is_same_v<TB, cplx>) {
    return combine_parts(matmul(a, real_part(b)), matmul(a, imag_part(b)));
  }
  Matrix<TC> c(a.rows(), b.cols());
  constexpr std::size_t kBlockP = 256;
  constexpr std::size_t kBlockJ = 512;
  const std::size_t m = a.rows(), kk = a.cols(), n = b.cols();
  for (std::size_t j0 = 0; j0 < n; j0 += kBlockJ) {
    const std::size_t j1 = std::min(n, j0 + kBlockJ);
    for (std::size_t p0 = 0; p0 < kk; p0 += kBlockP) {
      const std::size_t p1 = std::min(kk, p0 + kBlockP);
      std::size_t i = 0;
      for (; i + 4 <= m; i += 4) detail::matmul_panel(a, b, c, i, 4, p0, p1, j0, j1);
      if (i < m) detail::matmul_panel(a, b, c, i, m - i, p0, p1, j0, j1);
    }
  }
  return c;
}

/// Matrix-vector product.
template <Scalar TA, Scalar TX>
std::vector<promote_t<TA, TX>> matvec(const Matrix<TA>& a, std::span<const TX> x) {
  if (a.cols() != x.size()) throw DimensionError("matvec " + shape_string(a) + " * vector of " + std::to_string(x.size()));
  std::vector<promote_t<TA, TX>> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    promote_t<TA, TX> s{};
    const auto r = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

template <Scalar T>
double vector_norm(std::span<const T> x) {
  double s = 0.0;
  for (const T& v : x) s += abs2(v);
  return std::sqrt(s);
}

}  // namespace rlu
