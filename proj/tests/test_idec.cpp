#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rlu/interpolative.hpp"

using namespace rlu;

namespace {

template <Scalar T>
void check_id(const Matrix<T>& y, const RowID<T>& id, double tol) {
  REQUIRE(id.J.size() == id.r);
  REQUIRE(id.X.rows() == y.rows());
  REQUIRE(id.X.cols() == id.r);
  const std::set<std::size_t> distinct(id.J.begin(), id.J.end());
  CHECK(distinct.size() == id.r);
  for (std::size_t j : id.J) CHECK(j < y.rows());
  CHECK(oracle::max_abs_diff(gather_rows(id.X, id.J), Matrix<T>::identity(id.r)) <= 1e-12);
  const Matrix<T> approx = oracle::naive_matmul(id.X, gather_rows(y, id.J));
  CHECK(oracle::fro_diff(approx, y) <= tol * oracle::fro(y));
}

}  // namespace

TEST_CASE("identity columns select themselves") {
  const RealMatrix y = block(RealMatrix::identity(7), 0, 0, 7, 3);
  for (auto engine : {IdEngine::lu, IdEngine::qr}) {
    const RowID<double> id = row_id_full(y, engine);
    CHECK(id.r == 3);
    CHECK(id.J == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.X == y);
    CHECK(coefficient_magnitude(id) == 1.0);
  }
}

TEST_CASE("a duplicated row is not needed twice") {
  RealMatrix y = oracle::random_matrix(1, 6, 3);
  for (std::size_t j = 0; j < 3; ++j) y(4, j) = y(1, j);
  const RowID<double> id = row_id_full(y);
  check_id(y, id, 1e-12);
  CHECK(!(std::count(id.J.begin(), id.J.end(), 1) && std::count(id.J.begin(), id.J.end(), 4)));
}

TEST_CASE("random full-rank IDs reconstruct") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RealMatrix y = oracle::random_matrix(seed, 10, 4);
    check_id(y, row_id_full(y, IdEngine::lu), 1e-10);
    check_id(y, row_id_full(y, IdEngine::qr), 1e-10);
    const ComplexMatrix c = oracle::random_complex_matrix(seed, 12, 5);
    check_id(c, row_id_full(c), 1e-10);
  }
}

TEST_CASE("rank-r ID of an exactly rank-r matrix") {
  const RealMatrix y = oracle::rank_r_matrix(5, 30, 12, 4);
  for (auto engine : {IdEngine::lu, IdEngine::qr}) {
    const RowID<double> id = row_id(y, 4, engine);
    check_id(y, id, 1e-10);
    try {
      (void)row_id(y, 5, engine);
      FAIL("expected RankDeficiencyError");
    } catch (const RankDeficiencyError& e) {
      CHECK(e.achievable_rank() == 4);
    }
  }
  CHECK_THROWS_AS(row_id_full(y), RankDeficiencyError);
}

TEST_CASE("rank-one ID picks the largest entry") {
  const RealMatrix u = oracle::random_matrix(3, 9, 1);
  const RealMatrix v = oracle::random_matrix(4, 1, 5);
  const RealMatrix y = oracle::naive_matmul(u, v);
  std::size_t best = 0;
  for (std::size_t i = 1; i < 9; ++i)
    if (std::abs(u(i, 0)) > std::abs(u(best, 0))) best = i;
  const RowID<double> id = row_id(y, 1);
  CHECK(id.J == std::vector<std::size_t>{best});
  CHECK(std::abs(coefficient_magnitude(id) - 1.0) <= 1e-15);
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(id.X(i, 0) - u(i, 0) / u(best, 0)) <= 1e-14);
}

TEST_CASE("coefficient magnitudes under greedy pivoting") {
  double worst = 0.0;
  std::size_t above_two = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double c = coefficient_magnitude(row_id_full(oracle::random_matrix(seed, 20, 5)));
    worst = std::max(worst, c);
    if (c > 2.0) ++above_two;
    CHECK(c >= 1.0);
    CHECK(c <= 10.0);
  }
  if (above_two > 0) MESSAGE(above_two << " of 50 IDs exceed magnitude 2 (max " << worst << ")");
}

TEST_CASE("ID read off a partial-pivot LU") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix y = oracle::random_complex_matrix(seed, 15, 6);
    const RowID<cplx> from_lu = row_id_from_lu(lu_partial_pivot(y), 6);
    check_id(y, from_lu, 1e-10);
    const RowID<cplx> direct = row_id_full(y);
    CHECK(from_lu.J == direct.J);
    CHECK(oracle::max_abs_diff(from_lu.X, direct.X) <= 1e-12 * 15);
  }
  CHECK_THROWS_AS(row_id_from_lu(lu_partial_pivot(oracle::rank_r_matrix(1, 8, 4, 2)), 3), RankDeficiencyError);
}
