#include "parmod/poly.hpp"

#include <sstream>

#include "parmod/errors.hpp"

namespace parmod {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

std::vector<Rational> UniPoly::padded(std::size_t len) const {
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len && i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  return out;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::reversed(std::size_t deg) const {
  if (degree() > static_cast<long>(deg)) throw DomainError("reversal degree below polynomial degree");
  std::vector<Rational> v(deg + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[deg - i] = coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

UniPoly binomial_power(long sign, std::size_t k, unsigned e) {
  return (UniPoly::constant(1) + UniPoly::monomial(Rational(sign), k)).pow(e);
}

UniPoly poly_divide_exact(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw NonExactDivision("numerator degree below denominator degree");

  std::vector<Rational> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const Rational lead_inv = d.back().inverse();
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dd] * lead_inv;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (!rem[i].is_zero()) {
      throw NonExactDivision("nonzero remainder at t^" + std::to_string(i) + " dividing (" +
                             num.to_string() + ") by (" + den.to_string() + ")");
    }
  }
  return UniPoly(std::move(quot));
}

}  // namespace parmod
