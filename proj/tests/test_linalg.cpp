#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "midx/matrix.hpp"

using namespace midx;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref of simple matrices") {
  const RationalMatrix id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const RrefResult r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});

  const RrefResult s = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(s.matrix == from_rows({{1, 2}, {0, 0}}));
  CHECK(s.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("nullspace of simple matrices") {
  CHECK(nullspace_basis(RationalMatrix(2, 3)).size() == 3);

  const auto basis = nullspace_basis(from_rows({{1, -1}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == basis[0][1]);
  CHECK(basis[0][0] != 0);
}

TEST_CASE("rank plus nullity and exact kernels on random matrices") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 5;
    const std::size_t cols = 1 + (trial * 7) % 6;
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const auto basis = nullspace_basis(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += m.at(r, c) * v[c];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("rref is idempotent and insensitive to row order") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = random_matrix(rng, 4, 5);
    const RrefResult first = rref(m);
    CHECK(rref(first.matrix).matrix == first.matrix);

    RationalMatrix reversed(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        reversed.at(r, c) = m.at(m.rows() - 1 - r, c);
    CHECK(rref(reversed).matrix == first.matrix);
  }
}
