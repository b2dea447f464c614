#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parmod/euler.hpp"
#include "parmod/matrix.hpp"
#include "parmod/poly.hpp"
#include "parmod/series.hpp"

namespace parmod {

/// Moments c_n = L(x^n) of a linear functional on polynomials.
struct MomentSequence {
  std::vector<Rational> moments;

  /// c_n = |E_n| for n = 0..count-1.
  static MomentSequence euler(std::size_t count);
  static MomentSequence euler(const EulerTable& table, std::size_t count);

  std::size_t size() const { return moments.size(); }
  /// Throws InsufficientMoments past the end.
  const Rational& at(std::size_t k) const;
  /// L(p) = sum_i p_i c_i
  Rational functional(const UniPoly& p) const;
};

/// floor(m/2) x (floor(m/2)+1) matrix with entry (i, j) = c_{2e+2i+2j}.
RationalMatrix hankel(const MomentSequence& ms, std::size_t m, std::size_t parity_offset);

struct OrthoPolySequence {
  std::vector<UniPoly> polys;   // p_0..p_K
  std::vector<Rational> alphas; // alpha_0..alpha_{K-1}
  std::vector<Rational> betas;  // beta_1..beta_{K-1}; betas[k-1] = beta_k
  std::vector<Rational> norms;  // L(p_k^2), k = 0..K
};

enum class SummationOrder { forward, reverse };

/// Monic orthogonal polynomials p_0..p_K by projecting x^k away from
/// p_0..p_{k-1} under the moment pairing. Needs moments c_0..c_{2K}.
/// Throws DegenerateMoments when some L(p_k^2), k < K, vanishes.
OrthoPolySequence gram_schmidt_ortho(const MomentSequence& ms, std::size_t K,
                                     SummationOrder order = SummationOrder::forward);

struct ThreeTermCoeffs {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;  // betas[k-1] = beta_k
};

/// Reads alpha_k, beta_k off the sequence and checks that
/// p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1} holds for every k < K.
ThreeTermCoeffs three_term_coeffs(const OrthoPolySequence& ops);

/// c0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - ... beta_depth x^2 / 1))
/// expanded through x^order. Uses alphas[0..depth-1] and betas[0..depth-1].
TruncatedSeries j_fraction_series(const Rational& c0, const ThreeTermCoeffs& coeffs, std::size_t depth,
                                  std::size_t order);

struct CfVerdict {
  bool match = true;
  std::size_t depth = 0;
  std::size_t checked_through = 0;
  std::optional<std::size_t> first_mismatch;
};

/// Extracts the recurrence data from ms itself and compares the depth-level
/// J-fraction with sum c_n x^n through x^(2 depth).
CfVerdict cf_vs_moments(const MomentSequence& ms, std::size_t depth);

/// Same comparison with externally supplied recurrence data.
CfVerdict cf_matches_moments(const MomentSequence& ms, const ThreeTermCoeffs& coeffs, std::size_t depth);

}  // namespace parmod
