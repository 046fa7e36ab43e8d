#include "rlu/cli/synthesis.hpp"

#include <cmath>

#include "rlu/io.hpp"
#include "rlu/qr.hpp"
#include "rlu/random.hpp"

namespace rlu::cli {

std::vector<double> spectrum_values(const SpectrumSpec& spec) {
  if (spec.m == 0 || spec.n == 0) throw ParameterError("matrix dimensions must be positive");
  const std::size_t r = std::min(spec.m, spec.n);
  std::vector<double> sigma(r, 0.0);
  switch (spec.kind) {
    case SpectrumSpec::Kind::exponential:
      if (!(spec.rho > 0.0 && spec.rho < 1.0)) throw ParameterError("exponential spectrum needs 0 < rho < 1");
      for (std::size_t j = 0; j < r; ++j) sigma[j] = std::pow(spec.rho, static_cast<double>(j + 1));
      break;
    case SpectrumSpec::Kind::step:
      if (spec.rank == 0 || spec.rank > r) {
        throw ParameterError("step spectrum rank " + std::to_string(spec.rank) + " must lie in [1, " +
                             std::to_string(r) + "]");
      }
      std::fill(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(spec.rank), 1.0);
      break;
    case SpectrumSpec::Kind::custom: {
      const RealMatrix values = read_csv(spec.file);
      if (values.size() > r) {
        throw ParameterError("custom spectrum lists " + std::to_string(values.size()) + " values for min(m, n) = " +
                             std::to_string(r));
      }
      std::copy(values.values().begin(), values.values().end(), sigma.begin());
      for (std::size_t j = 0; j < r; ++j) {
        if (!(sigma[j] >= 0.0)) throw ParameterError("custom spectrum values must be nonnegative");
        if (j > 0 && sigma[j] > sigma[j - 1]) throw ParameterError("custom spectrum must be nonincreasing");
      }
      break;
    }
  }
  return sigma;
}

RealMatrix matrix_with_singular_values(std::size_t m, std::size_t n, const std::vector<double>& sigma,
                                       std::uint64_t seed) {
  std::size_t r = 0;
  while (r < sigma.size() && sigma[r] > 0.0) ++r;
  if (r == 0) return RealMatrix(m, n);
  RandomStream stream(seed);
  RealMatrix q1 = householder_qr(gaussian_matrix(stream, m, r)).Q;
  const RealMatrix q2 = householder_qr(gaussian_matrix(stream, n, r)).Q;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j) q1(i, j) *= sigma[j];
  return matmul(q1, transpose(q2));
}

RealMatrix synthesize(const SpectrumSpec& spec) {
  return matrix_with_singular_values(spec.m, spec.n, spectrum_values(spec), spec.seed);
}

}  // namespace rlu::cli
