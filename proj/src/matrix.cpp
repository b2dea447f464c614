#include "parmod/matrix.hpp"

#include "parmod/errors.hpp"

namespace parmod {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

RowEchelon row_reduce(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  RationalMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    const Rational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    // normalize: last nonzero entry becomes 1
    for (std::size_t i = v.size(); i-- > 0;) {
      if (!v[i].is_zero()) {
        const Rational s = v[i].inverse();
        for (auto& x : v) x *= s;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace parmod
