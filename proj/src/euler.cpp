#include "parmod/euler.hpp"

#include <string>

#include "parmod/errors.hpp"
#include "parmod/poly.hpp"

namespace parmod {

const BigInt& EulerTable::at(std::size_t j) const {
  if (j >= values_.size()) {
    throw DomainError("Euler table holds E_0..E_" + std::to_string(max_index()) + ", asked for E_" +
                      std::to_string(j));
  }
  return values_[j];
}

BigInt EulerTable::magnitude(std::size_t j) const { return ::abs(at(j)); }

EulerTable EulerTable::with_entry(std::size_t j, const BigInt& v) const {
  EulerTable copy = *this;
  if (j >= copy.values_.size()) throw DomainError("Euler index out of range");
  copy.values_[j] = v;
  return copy;
}

EulerTable euler_numbers(std::size_t max_index) {
  std::vector<BigInt> e(max_index + 1, BigInt(0));
  e[0] = 1;
  for (std::size_t n = 1; 2 * n <= max_index; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += binomial(2 * n, 2 * k) * e[2 * k];
    e[2 * n] = -acc;
  }
  return EulerTable(std::move(e));
}

TruncatedSeries euler_abs_series(const EulerTable& table, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t j = 0; j <= order; j += 2) s[j] = Rational(table.magnitude(j));
  return s;
}

TruncatedSeries euler_abs_series(std::size_t order) { return euler_abs_series(euler_numbers(order), order); }

TruncatedSeries cf_convergent(std::size_t depth, std::size_t order) {
  if (depth == 0) throw DomainError("continued fraction depth must be at least 1");
  // Level k denominator 1 - k^2 z^2 / (tail) is kept as num/den polynomials.
  UniPoly num = UniPoly::constant(1);
  UniPoly den = UniPoly::constant(1);
  for (std::size_t k = depth; k >= 1; --k) {
    const UniPoly kz2 = UniPoly::monomial(Rational(static_cast<long>(k * k)), 2);
    UniPoly next_num = num - kz2 * den;
    den = num;
    num = std::move(next_num);
  }
  // value = 1 / (num/den) = den/num
  return TruncatedSeries(order, den) / TruncatedSeries(order, num);
}

BetaCoefficient dirichlet_beta_coeff(const EulerTable& table, unsigned l) {
  const BigInt& e2l = table.at(2 * l);
  const BigInt signed_e = (l % 2 == 0) ? e2l : BigInt(-e2l);
  return {l, Rational(signed_e, pow2(2 * l + 2) * factorial(2 * l))};
}

BetaCoefficient dirichlet_beta_coeff(unsigned l) { return dirichlet_beta_coeff(euler_numbers(2 * l), l); }

}  // namespace parmod
