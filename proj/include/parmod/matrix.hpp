#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "parmod/rational.hpp"

namespace parmod {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector operator*(const RationalVector& v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector is scaled so its last nonzero
/// entry is 1; vectors are ordered by their free column.
std::vector<RationalVector> kernel(const RationalMatrix& m);

}  // namespace parmod
