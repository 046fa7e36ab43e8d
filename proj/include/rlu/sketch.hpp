#pragma once

#include <cstdint>
#include <vector>

#include "rlu/matrix.hpp"

namespace rlu {

enum class SketchKind { gaussian, srft };

/// Description of a random projection from dimension n down to l. Gaussian sketches are
/// regenerated from the seed; SRFT sketches carry their sampled phases and columns.
struct SketchOperator {
  SketchKind kind = SketchKind::gaussian;
  std::size_t n = 0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
  std::vector<cplx> d_phases;            ///< srft only, length n, unit modulus
  std::vector<std::size_t> selected_cols;  ///< srft only, l distinct indices
};

SketchOperator make_gaussian_sketch(std::size_t n, std::size_t l, std::uint64_t seed);

/// R = D F S: phases exp(2 pi i u) drawn first, then l columns sampled without replacement
/// by a partial Fisher-Yates shuffle on the same stream.
SketchOperator make_srft_sketch(std::size_t n, std::size_t l, std::uint64_t seed);

/// The n x l Gaussian matrix G the operator stands for.
RealMatrix gaussian_sketch_matrix(const SketchOperator& op);

/// Y = A G.
RealMatrix apply_gaussian(const RealMatrix& a, const SketchOperator& op);

/// Y = A D F S with F_jk = n^{-1/2} exp(-2 pi i jk / n), one FFT per row.
template <Scalar T>
ComplexMatrix apply_srft(const Matrix<T>& a, const SketchOperator& op);

/// The explicit n x l matrix R = D F S.
ComplexMatrix materialize_srft(const SketchOperator& op);

/// ||R^H R - I_l||_F of the materialised R.
double srft_column_orthonormality(const SketchOperator& op);

}  // namespace rlu
