#pragma once

#include <cstddef>
#include <vector>

#include "midx/rational.hpp"

namespace midx {

// Dense matrix over exact rationals; dimensions fixed at construction.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t row, std::size_t col);
  const Rational& at(std::size_t row, std::size_t col) const;

  bool operator==(const RationalMatrix& other) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row-echelon form with deterministic pivoting: first nonzero
// entry in column order.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0} from the free-column parameterization of the
// rref; returns cols - rank vectors.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

}  // namespace midx
