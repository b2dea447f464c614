#include "parmod/betti.hpp"

#include <algorithm>

#include "parmod/errors.hpp"
#include "parmod/series.hpp"

namespace parmod {

namespace {

int ceil_div(int a, int b) {
  // b > 0
  int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

void require_nonnegative_dim(const ModuliParams& p) {
  if (p.dim() < 0) {
    throw DomainError("R_{" + std::to_string(p.g) + "," + std::to_string(p.n) + "} has negative dimension " +
                      std::to_string(p.dim()));
  }
}

}  // namespace

ModuliParams::ModuliParams(int genus, int points) : g(genus), n(points) {
  if (g < 0) throw DomainError("genus must be >= 0, got " + std::to_string(g));
  if (n < 1 || n % 2 == 0) throw DomainError("n must be odd and >= 1, got " + std::to_string(n));
}

std::vector<StrataType> destabilizing_types(const ModuliParams& p, int max_degree) {
  std::vector<StrataType> out;
  for (int e = 0; e <= p.n; ++e) {
    for (int lambda = ceil_div(-p.n - 2 * e, 4);; ++lambda) {
      const StrataType t{lambda, e};
      if (2 * t.codimension(p) > max_degree) break;
      out.push_back(t);
    }
  }
  return out;
}

UniPoly poincare_strata(const ModuliParams& p) {
  require_nonnegative_dim(p);
  const int dim = p.dim();
  const auto order = static_cast<std::size_t>(dim + 4);

  TruncatedSeries strata(order);
  for (const StrataType& t : destabilizing_types(p, static_cast<int>(order))) {
    strata.add_term(Rational(binomial(p.n, t.e)), static_cast<std::size_t>(2 * t.codimension(p)));
  }

  const TruncatedSeries lead(order, UniPoly{1, -1, 1}.pow(2 * p.g) * binomial_power(1, 2, p.n - 1));
  const TruncatedSeries one_minus_t2(order, UniPoly{1, 0, -1});
  TruncatedSeries bracket = lead - one_minus_t2 * strata;

  const TruncatedSeries one_plus_t(order, UniPoly{1, 1});
  const int exponent = 2 * p.g - 2;
  if (exponent >= 0) {
    bracket = bracket * TruncatedSeries(order, UniPoly{1, 1}.pow(exponent));
  } else {
    bracket = bracket / (one_plus_t * one_plus_t);
  }
  const TruncatedSeries one_minus_t(order, UniPoly{1, -1});
  const TruncatedSeries result = bracket / (one_minus_t * one_minus_t);

  for (std::size_t k = dim + 1; k <= order; ++k) {
    if (!result[k].is_zero()) {
      throw NonPolynomialResult("strata sum leaves coefficient " + result[k].to_string() + " at t^" +
                                std::to_string(k) + " above dimension " + std::to_string(dim));
    }
  }
  UniPoly poly = result.to_poly();
  if (poly.degree() != dim) {
    throw NonPolynomialResult("strata sum has degree " + std::to_string(poly.degree()) + ", expected " +
                              std::to_string(dim));
  }
  return poly;
}

UniPoly poincare_closed(const ModuliParams& p) {
  require_nonnegative_dim(p);
  const UniPoly num = binomial_power(1, 2, p.n) * binomial_power(1, 3, 2 * p.g) -
                      UniPoly::monomial(Rational(pow2(p.n - 1)), 2 * p.g + p.n - 1) * UniPoly{1, 1}.pow(2 * p.g) *
                          UniPoly{1, 0, 1};
  const UniPoly den = UniPoly{1, 0, -1} * UniPoly{1, 0, 0, 0, -1};
  return poly_divide_exact(num, den);
}

UniPoly poincare_recursion_n(const ModuliParams& p, const UniPoly& base) {
  require_nonnegative_dim(p);
  return binomial_power(1, 2, 2) * base +
         UniPoly::monomial(Rational(pow2(p.n - 1)), 2 * p.g + p.n - 1) * UniPoly{1, 1}.pow(2 * p.g);
}

UniPoly poincare_recursion_g(const ModuliParams& p, const UniPoly& base) {
  require_nonnegative_dim(p);
  return binomial_power(1, 3, 2) * base + UniPoly::monomial(Rational(pow2(p.n - 1)), 2 * p.g + p.n - 1) *
                                              UniPoly{1, 1}.pow(2 * p.g) * UniPoly{1, 0, 1};
}

UniPoly poincare_by_recursion_n(const ModuliParams& p) {
  require_nonnegative_dim(p);
  int n = p.g == 0 ? 3 : 1;
  UniPoly poly = poincare_closed(ModuliParams(p.g, n));
  for (; n < p.n; n += 2) poly = poincare_recursion_n(ModuliParams(p.g, n), poly);
  return poly;
}

UniPoly poincare_by_recursion_g(const ModuliParams& p) {
  require_nonnegative_dim(p);
  int g = p.n == 1 ? 1 : 0;
  UniPoly poly = poincare_closed(ModuliParams(g, p.n));
  for (; g < p.g; ++g) poly = poincare_recursion_g(ModuliParams(g, p.n), poly);
  return poly;
}

const char* to_string(BettiMethod m) {
  switch (m) {
    case BettiMethod::strata: return "strata";
    case BettiMethod::closed: return "closed";
    case BettiMethod::rec_n: return "rec-n";
    case BettiMethod::rec_g: return "rec-g";
  }
  return "?";
}

BettiMethod parse_betti_method(const std::string& s) {
  for (auto m : {BettiMethod::strata, BettiMethod::closed, BettiMethod::rec_n, BettiMethod::rec_g}) {
    if (s == to_string(m)) return m;
  }
  throw DomainError("unknown Betti method '" + s + "' (expected strata|closed|rec-n|rec-g|all)");
}

UniPoly poincare(const ModuliParams& p, BettiMethod method) {
  switch (method) {
    case BettiMethod::strata: return poincare_strata(p);
    case BettiMethod::closed: return poincare_closed(p);
    case BettiMethod::rec_n: return poincare_by_recursion_n(p);
    case BettiMethod::rec_g: return poincare_by_recursion_g(p);
  }
  throw DomainError("unknown Betti method");
}

std::vector<BigInt> bgraded_counts(int n, int max_degree) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<BigInt> counts(std::max(max_degree, -1) + 1, BigInt(0));
  for (int d = 0; d <= max_degree; d += 2) {
    const int half = d / 2;  // a + 2b + |J|
    for (int j = 0; j <= std::min(n, half); ++j) {
      const int rest = half - j;  // a + 2b = rest has rest/2 + 1 solutions
      counts[d] += binomial(n, j) * (rest / 2 + 1);
    }
  }
  return counts;
}

bool StructuralReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

void StructuralReport::require_ok() const {
  for (const auto& c : checks) {
    if (!c.passed) throw CheckFailed(c.name, c.detail);
  }
}

StructuralReport structural_checks(const ModuliParams& p) { return structural_checks(p, poincare_closed(p)); }

StructuralReport structural_checks(const ModuliParams& p, const UniPoly& poly) {
  require_nonnegative_dim(p);
  StructuralReport rep{p, poly, {}};
  const int dim = p.dim();

  {
    StructuralCheck c{"poincare-duality", true, true, ""};
    if (poly.degree() != dim || poly.reversed(dim) != poly) {
      c.passed = false;
      c.detail = "P = " + poly.to_string() + " is not palindromic of degree " + std::to_string(dim);
    }
    rep.checks.push_back(c);
  }
  {
    StructuralCheck c{"b0=1", true, poly.coeff(0) == Rational(1), "b0 = " + poly.coeff(0).to_string()};
    rep.checks.push_back(c);
  }
  {
    StructuralCheck c{"b2=n+1", dim >= 4, true, ""};
    if (c.applied) {
      c.passed = poly.coeff(2) == Rational(p.n + 1);
      c.detail = "b2 = " + poly.coeff(2).to_string() + ", n+1 = " + std::to_string(p.n + 1);
    } else {
      c.detail = "skipped: dim " + std::to_string(dim) + " < 4 (b2 = " + poly.coeff(2).to_string() + ")";
    }
    rep.checks.push_back(c);
  }
  {
    StructuralCheck c{"bgraded-middle-dimension", p.g == 0, true, ""};
    if (c.applied) {
      const int mid = p.n - 3;
      const auto counts = bgraded_counts(p.n, mid);
      for (int d = 0; d <= mid; ++d) {
        if (poly.coeff(d) != Rational(counts[d])) {
          c.passed = false;
          c.detail = "degree " + std::to_string(d) + ": P has " + poly.coeff(d).to_string() + ", B_{0,n} has " +
                     counts[d].get_str();
          break;
        }
      }
      if (c.passed) c.detail = "agrees through degree " + std::to_string(mid);
    } else {
      c.detail = "skipped: genus > 0";
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace parmod
