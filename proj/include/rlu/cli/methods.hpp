#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlu/lu.hpp"
#include "rlu/matrix.hpp"

namespace rlu::cli {

enum class Method { randlu, fastrandlu, randsvd, randid, svd_oracle };

std::string_view method_name(Method m);
/// Throws ParameterError for unknown names.
Method parse_method(std::string_view name);

PivotMode parse_pivot_mode(std::string_view name);
std::string_view pivot_mode_name(PivotMode mode);

/// A rank-k approximation of A in its original row and column order.
struct Approximation {
  RealMatrix reconstruction;  ///< real part for the SRFT method
  double wall_time_ms = 0.0;  ///< factorization only, reconstruction excluded
  std::vector<std::string> warnings;
};

/// Runs one method once. `l` is ignored by svd_oracle, which truncates an exact SVD.
Approximation approximate(const RealMatrix& a, Method method, std::size_t k, std::size_t l, std::uint64_t seed,
                          PivotMode mode = PivotMode::partial);

double median(std::vector<double> values);

/// ||A - A_hat||_F / ||A||_F.
double relative_frobenius_error(const RealMatrix& a, const RealMatrix& approx);

}  // namespace rlu::cli
