#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parmod/rational.hpp"

namespace parmod {

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incremental exact Gaussian elimination on sparse rows.
///
/// Stored rows are monic at their leading column and only carry entries at
/// or after it. Columns with a smaller index are preferred as pivots.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == cols_; }
  bool has_pivot(std::size_t col) const { return pivots_[col].has_value(); }

  /// Reduces the row against the stored pivots and keeps it if anything
  /// survives. Returns true when the rank grew.
  bool insert(const SparseRow& row);

  /// Fully reduced remainder: no entry sits in a pivot column.
  SparseRow reduce(const SparseRow& row) const;

 private:
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::optional<SparseRow>> pivots_;
};

}  // namespace parmod
