#include "parmod/rational.hpp"

#include "parmod/errors.hpp"

namespace parmod {

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: '" + text + "'");
  }
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace parmod
