#pragma once

#include <cstddef>
#include <vector>

#include "parmod/rational.hpp"
#include "parmod/series.hpp"

namespace parmod {

/// Signed Euler numbers E_0..E_max, the Taylor coefficients of sech(z)
/// scaled by j!.
class EulerTable {
 public:
  EulerTable() = default;
  explicit EulerTable(std::vector<BigInt> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  std::size_t max_index() const { return values_.empty() ? 0 : values_.size() - 1; }

  /// Signed E_j; throws DomainError past the end of the table.
  const BigInt& at(std::size_t j) const;
  /// |E_j|
  BigInt magnitude(std::size_t j) const;

  const std::vector<BigInt>& values() const { return values_; }

  /// Returns a copy with E_j replaced. Used to inject faults in verification.
  EulerTable with_entry(std::size_t j, const BigInt& v) const;

  friend bool operator==(const EulerTable&, const EulerTable&) = default;

 private:
  std::vector<BigInt> values_;
};

/// E_0..E_max_index from the integer recurrence
/// sum_{k=0..n} C(2n,2k) E_{2k} = 0 for n >= 1.
EulerTable euler_numbers(std::size_t max_index);

/// sum over 2n <= order of |E_2n| z^2n.
TruncatedSeries euler_abs_series(std::size_t order);
TruncatedSeries euler_abs_series(const EulerTable& table, std::size_t order);

/// The depth-level truncation 1/(1 - 1^2 z^2/(1 - 2^2 z^2/(... 1 - depth^2 z^2)))
/// expanded through z^order.
TruncatedSeries cf_convergent(std::size_t depth, std::size_t order);

/// beta(2l+1) = coeff * pi^(2l+1).
struct BetaCoefficient {
  unsigned l = 0;
  Rational coeff;
};

/// coeff = (-1)^l E_2l / (2^(2l+2) (2l)!)
BetaCoefficient dirichlet_beta_coeff(unsigned l);
BetaCoefficient dirichlet_beta_coeff(const EulerTable& table, unsigned l);

}  // namespace parmod
