#include "rlu/norms.hpp"

#include <cmath>
#include <vector>

#include "rlu/random.hpp"

namespace rlu {
namespace {

template <Scalar T>
std::vector<T> random_unit_vector(RandomStream& stream, std::size_t n) {
  std::vector<T> v(n);
  for (auto& x : v) x = T(stream.next_normal());
  const double nv = vector_norm<T>(v);
  for (auto& x : v) x /= nv;
  return v;
}

// y = A^H x
template <Scalar T>
std::vector<T> adjoint_matvec(const Matrix<T>& a, std::span<const T> x) {
  std::vector<T> y(a.cols(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const T xi = x[i];
    const auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += conj(r[j]) * xi;
  }
  return y;
}

}  // namespace

template <Scalar T>
NormEstimate estimate_spectral_norm(const Matrix<T>& a, const PowerIterationOptions& opts) {
  if (!(opts.tol > 0.0)) throw ParameterError("spectral_norm requires tol > 0");
  NormEstimate est;
  if (a.empty() || max_abs(a) == 0.0) {
    est.converged = true;
    return est;
  }
  RandomStream stream(opts.seed);
  std::vector<T> v = random_unit_vector<T>(stream, a.cols());
  bool restarted = false;
  double prev = 0.0;
  double prev_change = 0.0;
  for (std::size_t it = 1; it <= opts.max_iters; ++it) {
    const std::vector<T> w = matvec<T, T>(a, v);
    const double sigma = vector_norm<T>(w);  // Rayleigh estimate ||A v|| with ||v|| = 1
    std::vector<T> z = adjoint_matvec(a, std::span<const T>(w));
    const double nz = vector_norm<T>(z);
    est.iterations = it;
    est.value = std::max(est.value, sigma);
    if (nz == 0.0) {
      // Start vector landed in the null space; try once more from a fresh direction.
      if (restarted) {
        est.converged = true;
        return est;
      }
      restarted = true;
      v = random_unit_vector<T>(stream, a.cols());
      prev = 0.0;
      prev_change = 0.0;
      continue;
    }
    for (std::size_t j = 0; j < z.size(); ++j) v[j] = z[j] / nz;
    const double change = std::abs(sigma - prev);
    // Geometric convergence: the remaining error is about change * ratio / (1 - ratio).
    const double ratio = prev_change > 0.0 ? std::min(change / prev_change, 0.999) : 0.0;
    const double remaining = change * (ratio > 0.0 ? 1.0 / (1.0 - ratio) : 1.0);
    if (it > 2 && remaining <= opts.tol * sigma) {
      est.converged = true;
      return est;
    }
    prev_change = change;
    prev = sigma;
  }
  return est;
}

template <Scalar T>
double spectral_norm(const Matrix<T>& a, const PowerIterationOptions& opts) {
  const NormEstimate est = estimate_spectral_norm(a, opts);
  if (!est.converged) {
    throw ConvergenceError("power iteration did not converge in " + std::to_string(opts.max_iters) + " iterations",
                           est.value);
  }
  return est.value;
}

template NormEstimate estimate_spectral_norm<double>(const RealMatrix&, const PowerIterationOptions&);
template NormEstimate estimate_spectral_norm<cplx>(const ComplexMatrix&, const PowerIterationOptions&);
template double spectral_norm<double>(const RealMatrix&, const PowerIterationOptions&);
template double spectral_norm<cplx>(const ComplexMatrix&, const PowerIterationOptions&);

}  // namespace rlu
