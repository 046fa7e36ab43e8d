#include "rlu/sketch.hpp"

#include <cmath>
#include <numbers>

#include "rlu/fft.hpp"
#include "rlu/random.hpp"

namespace rlu {
namespace {

void check_shape(std::size_t n, std::size_t l) {
  if (n == 0 || l == 0) throw ParameterError("sketch dimensions must be positive");
  if (l > n) {
    throw ParameterError("sketch dimension l = " + std::to_string(l) + " exceeds input dimension n = " +
                         std::to_string(n));
  }
}

void check_operand(std::size_t cols, const SketchOperator& op, SketchKind kind) {
  if (op.kind != kind) throw ParameterError("sketch operator has the wrong kind for this application");
  if (cols != op.n) {
    throw DimensionError("sketch expects " + std::to_string(op.n) + " columns, matrix has " + std::to_string(cols));
  }
}

}  // namespace

SketchOperator make_gaussian_sketch(std::size_t n, std::size_t l, std::uint64_t seed) {
  check_shape(n, l);
  return {SketchKind::gaussian, n, l, seed, {}, {}};
}

SketchOperator make_srft_sketch(std::size_t n, std::size_t l, std::uint64_t seed) {
  check_shape(n, l);
  SketchOperator op{SketchKind::srft, n, l, seed, {}, {}};
  RandomStream stream(seed);
  op.d_phases.resize(n);
  for (auto& z : op.d_phases) {
    const double angle = 2.0 * std::numbers::pi * stream.next_uniform();
    z = {std::cos(angle), std::sin(angle)};
  }
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t span = n - i;
    const std::size_t pick = i + static_cast<std::size_t>(stream.next_uniform() * static_cast<double>(span));
    std::swap(pool[i], pool[std::min(pick, n - 1)]);
  }
  op.selected_cols.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(l));
  return op;
}

RealMatrix gaussian_sketch_matrix(const SketchOperator& op) {
  if (op.kind != SketchKind::gaussian) throw ParameterError("not a Gaussian sketch");
  return gaussian_matrix(op.seed, op.n, op.l);
}

RealMatrix apply_gaussian(const RealMatrix& a, const SketchOperator& op) {
  check_operand(a.cols(), op, SketchKind::gaussian);
  return matmul(a, gaussian_sketch_matrix(op));
}

template <Scalar T>
ComplexMatrix apply_srft(const Matrix<T>& a, const SketchOperator& op) {
  check_operand(a.cols(), op, SketchKind::srft);
  const std::size_t n = op.n;
  const FftPlan plan(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix y(a.rows(), op.l);
  std::vector<cplx> buf(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto src = a.row(i);
    for (std::size_t j = 0; j < n; ++j) buf[j] = src[j] * op.d_phases[j];
    plan.forward(buf);
    auto dst = y.row(i);
    for (std::size_t t = 0; t < op.l; ++t) dst[t] = buf[op.selected_cols[t]] * scale;
  }
  return y;
}

ComplexMatrix materialize_srft(const SketchOperator& op) {
  if (op.kind != SketchKind::srft) throw ParameterError("not an SRFT sketch");
  const std::size_t n = op.n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix r(n, op.l);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t t = 0; t < op.l; ++t) {
      const std::size_t e = (j * op.selected_cols[t]) % n;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
      r(j, t) = op.d_phases[j] * cplx(std::cos(angle), std::sin(angle)) * scale;
    }
  }
  return r;
}

double srft_column_orthonormality(const SketchOperator& op) {
  const ComplexMatrix r = materialize_srft(op);
  ComplexMatrix g = matmul(adjoint(r), r);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return frobenius_norm(g);
}

template ComplexMatrix apply_srft<double>(const Matrix<double>&, const SketchOperator&);
template ComplexMatrix apply_srft<cplx>(const Matrix<cplx>&, const SketchOperator&);

}  // namespace rlu
