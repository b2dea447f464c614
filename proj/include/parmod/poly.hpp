#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "parmod/rational.hpp"

namespace parmod {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies t^i. Trailing zeros are always stripped, so the
/// zero polynomial has no coefficients and operator== is structural.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  /// c * t^k
  static UniPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficients padded with zeros up to index len-1.
  std::vector<Rational> padded(std::size_t len) const;

  Rational eval(const Rational& x) const;
  UniPoly pow(unsigned k) const;
  /// t^deg * p(1/t) with the given reference degree.
  UniPoly reversed(std::size_t deg) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(char var = 't') const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// (a + b t^k)^e style helper: returns (1 + sign * t^k)^e.
UniPoly binomial_power(long sign, std::size_t k, unsigned e);

/// Quotient q with q * den == num. Throws NonExactDivision when the remainder
/// is nonzero and DomainError when den is zero.
UniPoly poly_divide_exact(const UniPoly& num, const UniPoly& den);

}  // namespace parmod
