#include "parmod/orthopoly.hpp"

#include <string>

#include "parmod/errors.hpp"

namespace parmod {

MomentSequence MomentSequence::euler(const EulerTable& table, std::size_t count) {
  MomentSequence ms;
  ms.moments.reserve(count);
  for (std::size_t k = 0; k < count; ++k) ms.moments.emplace_back(table.magnitude(k));
  return ms;
}

MomentSequence MomentSequence::euler(std::size_t count) {
  return euler(euler_numbers(count == 0 ? 0 : count - 1), count);
}

const Rational& MomentSequence::at(std::size_t k) const {
  if (k >= moments.size()) {
    throw InsufficientMoments("moment c_" + std::to_string(k) + " requested, only " +
                              std::to_string(moments.size()) + " supplied");
  }
  return moments[k];
}

Rational MomentSequence::functional(const UniPoly& p) const {
  Rational acc;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) acc += c[i] * at(i);
  }
  return acc;
}

RationalMatrix hankel(const MomentSequence& ms, std::size_t m, std::size_t parity_offset) {
  if (parity_offset > 1) throw DomainError("parity offset must be 0 or 1");
  const std::size_t rows = m / 2;
  const std::size_t cols = rows + 1;
  if (rows > 0) {
    const std::size_t need = 2 * parity_offset + 2 * (rows - 1) + 2 * (cols - 1);
    (void)ms.at(need);
  }
  RationalMatrix h(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) h(i, j) = ms.at(2 * parity_offset + 2 * i + 2 * j);
  }
  return h;
}

OrthoPolySequence gram_schmidt_ortho(const MomentSequence& ms, std::size_t K, SummationOrder order) {
  (void)ms.at(2 * K);
  OrthoPolySequence out;
  const UniPoly x = UniPoly::monomial(1, 1);

  for (std::size_t k = 0; k <= K; ++k) {
    UniPoly p = UniPoly::monomial(1, k);
    const UniPoly xk = p;
    auto project_out = [&](std::size_t j) {
      const Rational coeff = ms.functional(xk * out.polys[j]) / out.norms[j];
      p -= coeff * out.polys[j];
    };
    if (order == SummationOrder::forward) {
      for (std::size_t j = 0; j < k; ++j) project_out(j);
    } else {
      for (std::size_t j = k; j-- > 0;) project_out(j);
    }
    const Rational norm = ms.functional(p * p);
    if (norm.is_zero() && k < K) {
      throw DegenerateMoments("L(p_" + std::to_string(k) + "^2) = 0");
    }
    out.polys.push_back(std::move(p));
    out.norms.push_back(norm);
  }

  for (std::size_t k = 0; k < K; ++k) {
    const UniPoly& pk = out.polys[k];
    out.alphas.push_back(ms.functional(x * pk * pk) / out.norms[k]);
    if (k >= 1) out.betas.push_back(out.norms[k] / out.norms[k - 1]);
  }
  return out;
}

ThreeTermCoeffs three_term_coeffs(const OrthoPolySequence& ops) {
  const std::size_t K = ops.polys.empty() ? 0 : ops.polys.size() - 1;
  if (ops.alphas.size() != K || ops.betas.size() + 1 != std::max<std::size_t>(K, 1)) {
    throw RecurrenceMismatch("recurrence tables do not match the polynomial count");
  }
  const UniPoly x = UniPoly::monomial(1, 1);
  for (std::size_t k = 0; k < K; ++k) {
    UniPoly rhs = (x - UniPoly::constant(ops.alphas[k])) * ops.polys[k];
    if (k >= 1) rhs -= ops.betas[k - 1] * ops.polys[k - 1];
    if (rhs != ops.polys[k + 1]) {
      throw RecurrenceMismatch("three-term recurrence fails for p_" + std::to_string(k + 1) + ": expected " +
                               ops.polys[k + 1].to_string() + ", got " + rhs.to_string());
    }
  }
  return {ops.alphas, ops.betas};
}

TruncatedSeries j_fraction_series(const Rational& c0, const ThreeTermCoeffs& coeffs, std::size_t depth,
                                  std::size_t order) {
  if (depth == 0) throw DomainError("J-fraction depth must be at least 1");
  if (coeffs.alphas.size() < depth || coeffs.betas.size() < depth) {
    throw InsufficientMoments("J-fraction of depth " + std::to_string(depth) + " needs alpha_0..alpha_" +
                              std::to_string(depth - 1) + " and beta_1..beta_" + std::to_string(depth));
  }
  // Bottom-up: level k is (1 - alpha_k x) - beta_{k+1} x^2 / tail, held as num/den.
  UniPoly num = UniPoly::constant(1);
  UniPoly den = UniPoly::constant(1);
  for (std::size_t k = depth; k-- > 0;) {
    const UniPoly lin = UniPoly{1} - UniPoly::monomial(coeffs.alphas[k], 1);
    const UniPoly bx2 = UniPoly::monomial(coeffs.betas[k], 2);
    UniPoly next_num = lin * num - bx2 * den;
    den = num;
    num = std::move(next_num);
  }
  return TruncatedSeries(order, c0 * den) / TruncatedSeries(order, num);
}

CfVerdict cf_matches_moments(const MomentSequence& ms, const ThreeTermCoeffs& coeffs, std::size_t depth) {
  const std::size_t order = 2 * depth;
  const TruncatedSeries cf = j_fraction_series(ms.at(0), coeffs, depth, order);
  CfVerdict v{true, depth, order, std::nullopt};
  for (std::size_t k = 0; k <= order; ++k) {
    if (cf[k] != ms.at(k)) {
      v.match = false;
      v.first_mismatch = k;
      break;
    }
  }
  return v;
}

CfVerdict cf_vs_moments(const MomentSequence& ms, std::size_t depth) {
  const auto ops = gram_schmidt_ortho(ms, depth + 1);
  return cf_matches_moments(ms, three_term_coeffs(ops), depth);
}

}  // namespace parmod
