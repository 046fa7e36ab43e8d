#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlu/interpolative.hpp"
#include "rlu/lu.hpp"
#include "rlu/norms.hpp"
#include "rlu/permutation.hpp"
#include "rlu/sketch.hpp"
#include "rlu/svd.hpp"

namespace rlu {

/// P A Q ~ L U with L (m x k) unit lower trapezoidal and U (k x n) upper trapezoidal.
template <Scalar T>
struct LowRankLU {
  Permutation P;
  Permutation Q;
  Matrix<T> L;
  Matrix<T> U;
  std::size_t k = 0;
  std::size_t l = 0;
  SketchOperator sketch;
  std::vector<std::string> warnings;
};

/// Throws ParameterError unless 1 <= k <= l <= min(m, n).
void check_rank_parameters(std::size_t m, std::size_t n, std::size_t k, std::size_t l);

/// Randomized LU with a Gaussian sketch:
/// Y = A G, P Y Q_y = L_y U_y truncated to k columns, B = L_y^+ P A, B Q = L_b U_b,
/// L = L_y L_b, U = U_b. `mode` selects the pivoting used on Y (partial or complete).
LowRankLU<double> randomized_lu(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed,
                                PivotMode mode = PivotMode::partial);

/// P^T (L U) Q^T, the approximation of A in its original ordering.
template <Scalar T>
Matrix<T> reconstruct(const LowRankLU<T>& f);

/// ||P A Q - L U|| in the requested norm.
template <Scalar T>
double approx_error(const LowRankLU<T>& f, const RealMatrix& a, NormKind norm = NormKind::frobenius);

/// approx_error divided by ||A|| in the same norm.
template <Scalar T>
double relative_error(const LowRankLU<T>& f, const RealMatrix& a, NormKind norm = NormKind::frobenius);

struct RangeBasis {
  RealMatrix Q_basis;  ///< m x k, orthonormal columns
  std::size_t k = 0;
  std::size_t l = 0;
};

/// Orthonormal basis of the leading k left singular vectors of Y = A G.
RangeBasis range_finder(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed);

/// A ~ U diag(sigma) V^T of rank k.
struct SvdBaseline {
  RealMatrix U;
  std::vector<double> sigma;
  RealMatrix V;
};

/// Range finder followed by an exact SVD of Q^T A.
SvdBaseline randomized_svd_baseline(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed);

/// A ~ X A(J, :) with |J| = k.
struct IdBaseline {
  std::vector<std::size_t> J;
  RealMatrix X;
};

/// Row ID of the Gaussian sketch A G (pivoted-QR engine), applied to the rows of A.
IdBaseline randomized_id_baseline(const RealMatrix& a, std::size_t k, std::size_t l, std::uint64_t seed);

RealMatrix reconstruct(const SvdBaseline& s);
RealMatrix reconstruct(const IdBaseline& id, const RealMatrix& a);

}  // namespace rlu
