#pragma once

#include <cstddef>
#include <vector>

#include "phenylene/rational.hpp"

namespace phenylene {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Both routines use Gaussian elimination with the largest-magnitude entry of
// the current column as pivot. Singular input throws ArithmeticError.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);
/// Solves A X = B for every column of B in one elimination.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix inverse(const RationalMatrix& a);

}  // namespace phenylene
