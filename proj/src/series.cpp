#include "parmod/series.hpp"

#include "parmod/errors.hpp"

namespace parmod {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw DomainError("truncated series of different orders");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, const UniPoly& p) : coeffs_(order + 1) {
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) coeffs_[i] = p.coeffs()[i];
}

void TruncatedSeries::add_term(const Rational& c, std::size_t k) {
  if (k < coeffs_.size()) coeffs_[k] += c;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t n = order();
  TruncatedSeries inv(n);
  const Rational c0_inv = coeffs_[0].inverse();
  inv.coeffs_[0] = c0_inv;
  // inv_k = -c0^{-1} * sum_{j=1..k} c_j inv_{k-j}
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!coeffs_[j].is_zero()) acc += coeffs_[j] * inv.coeffs_[k - j];
    }
    inv.coeffs_[k] = -(acc * c0_inv);
  }
  return inv;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  TruncatedSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  return a * b.reciprocal();
}

}  // namespace parmod
