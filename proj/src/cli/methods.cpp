#include "rlu/cli/methods.hpp"

#include <algorithm>
#include <chrono>

#include "rlu/fast_randomized_lu.hpp"
#include "rlu/randomized_lu.hpp"
#include "rlu/svd.hpp"

namespace rlu::cli {

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::randlu, "randlu"},   {Method::fastrandlu, "fastrandlu"}, {Method::randsvd, "randsvd"},
    {Method::randid, "randid"},   {Method::svd_oracle, "svd_oracle"},
};

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [value, name] : kMethodNames)
    if (value == m) return name;
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [value, known] : kMethodNames)
    if (known == name) return value;
  throw ParameterError("unknown method '" + std::string(name) +
                       "' (expected randlu, fastrandlu, randsvd, randid or svd_oracle)");
}

PivotMode parse_pivot_mode(std::string_view name) {
  if (name == "partial") return PivotMode::partial;
  if (name == "complete") return PivotMode::complete;
  throw ParameterError("unknown pivot mode '" + std::string(name) + "' (expected partial or complete)");
}

std::string_view pivot_mode_name(PivotMode mode) {
  switch (mode) {
    case PivotMode::partial: return "partial";
    case PivotMode::column: return "column";
    case PivotMode::complete: return "complete";
  }
  return "unknown";
}

Approximation approximate(const RealMatrix& a, Method method, std::size_t k, std::size_t l, std::uint64_t seed,
                          PivotMode mode) {
  Approximation out;
  switch (method) {
    case Method::randlu: {
      LowRankLU<double> f;
      out.wall_time_ms = time_ms([&] { f = randomized_lu(a, k, l, seed, mode); });
      out.reconstruction = reconstruct(f);
      out.warnings = f.warnings;
      break;
    }
    case Method::fastrandlu: {
      LowRankLU<cplx> f;
      out.wall_time_ms = time_ms([&] { f = fast_randomized_lu(a, k, l, seed); });
      out.reconstruction = real_part(reconstruct(f));
      out.warnings = f.warnings;
      break;
    }
    case Method::randsvd: {
      SvdBaseline s;
      out.wall_time_ms = time_ms([&] { s = randomized_svd_baseline(a, k, l, seed); });
      out.reconstruction = reconstruct(s);
      break;
    }
    case Method::randid: {
      IdBaseline id;
      out.wall_time_ms = time_ms([&] { id = randomized_id_baseline(a, k, l, seed); });
      out.reconstruction = reconstruct(id, a);
      break;
    }
    case Method::svd_oracle: {
      if (k == 0 || k > std::min(a.rows(), a.cols())) {
        throw ParameterError("rank k = " + std::to_string(k) + " must lie in [1, min(m, n)] for " + shape_string(a));
      }
      SvdResult s;
      out.wall_time_ms = time_ms([&] { s = svd_oracle(a); });
      out.reconstruction = truncated_reconstruction(s, k);
      break;
    }
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ParameterError("median of an empty sample");
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (values.size() % 2 == 1) return *mid;
  return 0.5 * (*mid + *std::max_element(values.begin(), mid));
}

double relative_frobenius_error(const RealMatrix& a, const RealMatrix& approx) {
  const double scale = frobenius_norm(a);
  const double err = frobenius_norm(a - approx);
  return scale == 0.0 ? err : err / scale;
}

}  // namespace rlu::cli
