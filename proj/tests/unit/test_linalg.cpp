#include "circuitlab/linalg.hpp"
#include "circuitlab/families.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace circuitlab;

namespace {

RationalMatrix matrix(std::size_t cols,
                      std::vector<std::vector<std::int64_t>> rows) {
  RationalMatrix m(cols);
  for (const auto &r : rows)
    m.push_back(from_integers(r));
  return m;
}

RationalMatrix random_matrix(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const std::size_t rows = dim(rng);
  const std::size_t cols = dim(rng);
  RationalMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    RationalVector r;
    for (std::size_t j = 0; j < cols; ++j)
      r.emplace_back(rng() % 3 == 0 ? 0 : entry(rng), den(rng));
    m.push_back(r);
  }
  // Duplicate a combination of rows now and then to force rank deficiency.
  if (rows >= 2 && rng() % 2)
    m.push_back(add(m.rows[0], scale(m.rows[1], Rational(2))));
  return m;
}

} // namespace

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix::identity(2)) == 2);
  CHECK(rank(RationalMatrix::zero(3, 4)) == 0);
  const auto m = matrix(2, {{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(rank(m) == oracle::rank(m));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_basis(RationalMatrix::identity(3)).empty());
  const auto one = nullspace_basis(matrix(2, {{1, 1}}));
  REQUIRE(one.size() == 1);
  CHECK(is_scaling_of(one[0], from_integers({1, -1})));

  // Degree rows of K4 over its 6 edges.
  const EdgeIndex idx(4);
  RationalMatrix deg(idx.size());
  for (std::size_t v = 0; v < 4; ++v) {
    RationalVector row(idx.size());
    for (std::size_t u = 0; u < 4; ++u)
      if (u != v)
        row[idx.index(std::min(u, v), std::max(u, v))] = 1;
    deg.push_back(row);
  }
  const auto basis = nullspace_basis(deg);
  CHECK(basis.size() == idx.size() - oracle::rank(deg));
  for (const auto &v : basis)
    CHECK(is_zero(multiply(deg, v)));
}

TEST_CASE("unique nullspace solution") {
  const auto v = unique_nullspace_solution(matrix(2, {{1, 1}}));
  REQUIRE(v);
  CHECK(is_scaling_of(*v, from_integers({1, -1})));
  CHECK_FALSE(unique_nullspace_solution(RationalMatrix::identity(3)));
  CHECK_FALSE(unique_nullspace_solution(RationalMatrix::zero(1, 2)));
}

TEST_CASE("is_scaling_of") {
  CHECK(is_scaling_of(from_integers({2, -2}), from_integers({1, -1})));
  CHECK_FALSE(is_scaling_of(from_integers({1, 0}), from_integers({0, 1})));
  CHECK(is_scaling_of(from_integers({0, 0}), from_integers({1, 2})));
  CHECK_FALSE(is_scaling_of(from_integers({1, 2}), from_integers({0, 0})));
  CHECK_THROWS(is_scaling_of(from_integers({1}), from_integers({1, 2})));
}

TEST_CASE("primitive form and vector strings") {
  const RationalVector v = parse_vector("1/2,-3/4,0");
  CHECK(to_string(v) == "(1/2,-3/4,0)");
  const auto p = primitive_integer(v);
  CHECK(p == std::vector<BigInt>{2, -3, 0});
}

TEST_CASE("random matrices: kernel, rank-nullity, unique solution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const RationalMatrix m = random_matrix(rng);
    const auto basis = nullspace_basis(m);
    const std::size_t r = rank(m);
    CHECK(r == oracle::rank(m));
    CHECK(r + basis.size() == m.cols);
    for (const auto &v : basis)
      CHECK(is_zero(multiply(m, v)));
    if (!basis.empty()) {
      RationalMatrix stacked(m.cols);
      for (const auto &v : basis)
        stacked.push_back(v);
      CHECK(oracle::rank(stacked) == basis.size());
    }
    const auto u = unique_nullspace_solution(m);
    CHECK(u.has_value() == (basis.size() == 1));
    if (u && basis.size() == 1)
      CHECK(is_scaling_of(*u, basis[0]));
  }
}
