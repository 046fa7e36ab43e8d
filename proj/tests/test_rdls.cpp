#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rlu/rdls.hpp"

using namespace rlu;

namespace {

std::vector<double> random_vector(std::uint64_t seed, std::size_t n) {
  const RealMatrix v = oracle::random_matrix(seed, n, 1);
  return {v.values().begin(), v.values().end()};
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> times(const RealMatrix& a, const std::vector<double>& x) {
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

double residual(const RealMatrix& a, const std::vector<double>& x, const std::vector<double>& b) {
  std::vector<double> r = times(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return norm(r);
}

}  // namespace

TEST_CASE("consistent system on a padded identity") {
  RealMatrix a(10, 6);
  for (std::size_t i = 0; i < 3; ++i) a(i, i) = 1.0;
  std::vector<double> b(10, 0.0);
  b[0] = 2.0;
  b[1] = -1.0;
  b[2] = 0.5;
  const RdlsSolution s = solve_rdls(a, b, 3, 5, 1);
  CHECK(s.residual_norm <= 1e-10);
  CHECK(s.k_used == 3);
  CHECK(s.nonzero_count <= 3);
  CHECK(std::abs(s.x[0] - 2.0) <= 1e-12);
  CHECK(std::abs(s.x[1] + 1.0) <= 1e-12);
  CHECK(std::abs(s.x[2] - 0.5) <= 1e-12);
}

TEST_CASE("right-hand side orthogonal to the range") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RealMatrix a = oracle::rank_r_matrix(seed, 30, 12, 4);
    const RealMatrix q = oracle::column_space_basis(a);
    REQUIRE(q.cols() == 4);
    std::vector<double> b = random_vector(seed + 10, 30);
    for (std::size_t j = 0; j < 4; ++j) {
      double d = 0.0;
      for (std::size_t i = 0; i < 30; ++i) d += q(i, j) * b[i];
      for (std::size_t i = 0; i < 30; ++i) b[i] -= d * q(i, j);
    }
    const RdlsSolution s = solve_rdls(a, b, 4, 7, seed);
    const RealMatrix ahat = reconstruct(s.factors);
    CHECK(std::abs(residual(ahat, s.x, b) - norm(b)) <= 1e-9 * norm(b));
  }
}

TEST_CASE("residual matches the pseudoinverse residual of the surrogate") {
  for (std::size_t k : {3u, 5u})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const RealMatrix a = oracle::rank_r_matrix(seed + 50 * k, 50, 20, k);
      const std::vector<double> b = random_vector(seed + 7, 50);
      const RdlsSolution s = solve_rdls(a, b, k, 8, seed);
      const RealMatrix ahat = reconstruct(s.factors);
      const double best = oracle::residual_outside(oracle::column_space_basis(ahat), b);
      CHECK(std::abs(residual(ahat, s.x, b) - best) <= 1e-8 * best);
      CHECK(std::abs(s.residual_norm - best) <= 1e-8 * best);
      CHECK(s.nonzero_count <= k);
    }
}

TEST_CASE("x is supported on the first k pivot columns") {
  const RealMatrix a = oracle::rank_r_matrix(3, 40, 15, 6);
  const RdlsSolution s = solve_rdls(a, random_vector(4, 40), 6, 9, 2);
  for (std::size_t i = 6; i < 15; ++i) CHECK(s.x[s.factors.Q[i]] == 0.0);
  CHECK(s.nonzero_count == 6);
}

TEST_CASE("consistent rank-k systems are solved") {
  const RealMatrix a = oracle::rank_r_matrix(8, 50, 20, 5);
  const std::vector<double> b = times(a, random_vector(9, 20));
  const RdlsSolution s = solve_rdls(a, b, 5, 8, 3);
  CHECK(s.residual_norm <= 1e-8 * norm(b));
}

TEST_CASE("rdls parameter errors") {
  const RealMatrix wide = oracle::random_matrix(1, 5, 8);
  CHECK_THROWS_AS(solve_rdls(wide, random_vector(1, 5), 2, 3, 1), DimensionError);
  const RealMatrix a = oracle::random_matrix(1, 8, 5);
  CHECK_THROWS_AS(solve_rdls(a, random_vector(1, 7), 2, 3, 1), DimensionError);
  CHECK_THROWS_AS(solve_rdls(a, random_vector(1, 8), 4, 3, 1), ParameterError);
  CHECK_THROWS_AS(solve_rdls(oracle::rank_r_matrix(1, 8, 5, 1), random_vector(1, 8), 2, 3, 1), RankDeficiencyError);
}
