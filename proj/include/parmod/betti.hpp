#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parmod/poly.hpp"

namespace parmod {

/// Genus g and odd number n = 2m+1 of parabolic points, all weights 1/4.
struct ModuliParams {
  int g = 0;
  int n = 1;

  /// Validates g >= 0 and n odd >= 1; throws DomainError otherwise.
  ModuliParams(int genus, int points);

  int m() const { return (n - 1) / 2; }
  /// Real dimension 6g - 6 + 2n.
  int dim() const { return 6 * g - 6 + 2 * n; }

  friend bool operator==(const ModuliParams&, const ModuliParams&) = default;
};

/// Destabilizing type: sub-line-bundle degree lambda and e = sum of the
/// intersection indicators.
struct StrataType {
  int lambda = 0;
  int e = 0;

  bool destabilizing(int n) const { return 4 * lambda + 2 * e >= -n; }
  int codimension(const ModuliParams& p) const { return 2 * lambda + p.n + p.g - 1 + e; }
};

/// Every destabilizing type with 2d <= max_degree, e in 0..n.
std::vector<StrataType> destabilizing_types(const ModuliParams& p, int max_degree);

/// Poincare polynomial from the sum over unstable strata, evaluated in
/// truncated series arithmetic with a guard band of 4 degrees above the
/// dimension. Throws NonPolynomialResult if any guard coefficient survives.
UniPoly poincare_strata(const ModuliParams& p);

/// Closed form evaluated with exact polynomial division.
UniPoly poincare_closed(const ModuliParams& p);

/// P(g, n+2) from base = P(g, n).
UniPoly poincare_recursion_n(const ModuliParams& p, const UniPoly& base);

/// P(g+1, n) from base = P(g, n).
UniPoly poincare_recursion_g(const ModuliParams& p, const UniPoly& base);

/// P(g, n) by iterating the n-recursion up from the closed-form value at
/// the smallest admissible n (3 for g = 0, else 1).
UniPoly poincare_by_recursion_n(const ModuliParams& p);

/// P(g, n) by iterating the g-recursion up from the closed-form value at
/// genus 0 (genus 1 when n = 1).
UniPoly poincare_by_recursion_g(const ModuliParams& p);

enum class BettiMethod { strata, closed, rec_n, rec_g };

const char* to_string(BettiMethod m);
BettiMethod parse_betti_method(const std::string& s);
UniPoly poincare(const ModuliParams& p, BettiMethod method);

/// Entry d counts monomials alpha^a beta^b delta^J (J squarefree) of degree
/// 2a + 4b + 2|J| = d in C[alpha, beta, delta_1..delta_n]/(delta_i^2).
std::vector<BigInt> bgraded_counts(int n, int max_degree);

struct StructuralCheck {
  std::string name;
  bool applied = true;
  bool passed = true;
  std::string detail;
};

struct StructuralReport {
  ModuliParams params;
  UniPoly poly;
  std::vector<StructuralCheck> checks;

  bool ok() const;
  /// Throws CheckFailed naming the first violated property.
  void require_ok() const;
};

/// Poincare duality, b_0 = 1, b_2 = n + 1 (when dim >= 4) and, in genus 0,
/// agreement with bgraded_counts up to the middle dimension n - 3.
StructuralReport structural_checks(const ModuliParams& p);
StructuralReport structural_checks(const ModuliParams& p, const UniPoly& poly);

}  // namespace parmod
