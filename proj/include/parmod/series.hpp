#pragma once

#include <cstddef>
#include <vector>

#include "parmod/poly.hpp"
#include "parmod/rational.hpp"

namespace parmod {

/// Power series in t known exactly through t^order.
///
/// Binary operations require equal orders; mixing orders is a programming
/// error and throws DomainError.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, const UniPoly& p);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Adds c * t^k, ignored when k exceeds the order.
  void add_term(const Rational& c, std::size_t k);

  /// Requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  /// The polynomial of all coefficients through the order.
  UniPoly to_poly() const { return UniPoly(coeffs_); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// a * b^{-1}; b must have a nonzero constant term.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace parmod
