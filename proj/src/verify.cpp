#include "parmod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "parmod/betti.hpp"
#include "parmod/errors.hpp"
#include "parmod/euler.hpp"
#include "parmod/oracles.hpp"
#include "parmod/orthopoly.hpp"
#include "parmod/relations.hpp"
#include "parmod/sweep.hpp"

namespace parmod {

bool VerificationReport::overall() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::optional<std::string> VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name;
  }
  return std::nullopt;
}

namespace {

struct Limits {
  int betti_genus;
  int betti_points;
  int relation_points;
  std::size_t ortho_degree;
  std::size_t cf_depth;
  std::vector<int> hilbert_points;
  int basis_points;
  int volume_genus;
  int volume_points;
};

Limits limits_for(VerifyScope scope) {
  if (scope == VerifyScope::full) return {4, 17, 17, 8, 8, {3, 5, 7, 9}, 21, 3, 11};
  return {2, 9, 9, 4, 8, {3, 5, 7}, 13, 2, 9};
}

// A check returns an empty string on success, otherwise the failure detail.
using CheckFn = std::function<std::string(std::string& note)>;

struct NamedCheck {
  std::string name;
  CheckFn run;
};

std::string le(int v) { return "≤" + std::to_string(v); }

std::vector<NamedCheck> build_checks(const EulerTable& E, const Limits& lim) {
  std::vector<NamedCheck> checks;

  checks.push_back({"01 betti small cases R_{0,3}, R_{0,5}", [](std::string& note) -> std::string {
    for (const auto& [n, expect] : {std::pair{3, UniPoly{1}}, std::pair{5, UniPoly{1, 0, 6, 0, 1}}}) {
      const ModuliParams p(0, n);
      for (auto m : {BettiMethod::strata, BettiMethod::closed, BettiMethod::rec_n, BettiMethod::rec_g}) {
        const UniPoly got = poincare(p, m);
        if (got != expect) return std::string(to_string(m)) + " gives " + got.to_string() + " for n=" + std::to_string(n);
      }
    }
    note = "P(0,3) = 1, P(0,5) = 1 + 6t^2 + t^4 by all four methods";
    return {};
  }});

  checks.push_back({"02 betti cross-method g" + le(lim.betti_genus) + " n" + le(lim.betti_points),
                    [lim](std::string& note) -> std::string {
    const auto results = betti_sweep(betti_grid(lim.betti_genus, lim.betti_points));
    for (const auto& r : results) {
      if (!r.methods_agree) return "methods disagree at (g,n)=(" + std::to_string(r.g) + "," + std::to_string(r.n) + ")";
    }
    note = std::to_string(results.size()) + " (g,n) points, strata = closed = rec-n = rec-g";
    return {};
  }});

  checks.push_back({"03 betti palindromic g" + le(lim.betti_genus) + " n" + le(lim.betti_points),
                    [lim](std::string& note) -> std::string {
    std::size_t count = 0;
    for (const auto& p : betti_grid(lim.betti_genus, lim.betti_points)) {
      const UniPoly P = poincare_closed(p);
      if (P.reversed(p.dim()) != P) return "not palindromic at (" + std::to_string(p.g) + "," + std::to_string(p.n) + ")";
      ++count;
    }
    note = std::to_string(count) + " polynomials";
    return {};
  }});

  checks.push_back({"04 b2=n+1", [lim](std::string& note) -> std::string {
    std::size_t count = 0;
    for (int n = 5; n <= lim.betti_points; n += 2) {
      const auto P = poincare_closed(ModuliParams(0, n));
      if (P.coeff(2) != Rational(n + 1)) return "b2 = " + P.coeff(2).to_string() + " at (0," + std::to_string(n) + ")";
      ++count;
    }
    for (int g = 1; g <= 3; ++g) {
      for (int n = 1; n <= 9; n += 2) {
        const ModuliParams p(g, n);
        if (p.dim() < 6) continue;
        const auto P = poincare_closed(p);
        if (P.coeff(2) != Rational(n + 1)) {
          return "b2 = " + P.coeff(2).to_string() + " at (" + std::to_string(g) + "," + std::to_string(n) + ")";
        }
        ++count;
      }
    }
    note = std::to_string(count) + " cases; (1,1) with dim 2 has b2 = 1 and is excluded";
    return {};
  }});

  checks.push_back({"05 euler listing E0..E8", [&E](std::string& note) -> std::string {
    const long expect[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385};
    for (std::size_t j = 0; j < 9; ++j) {
      if (E.at(j) != expect[j]) return "E_" + std::to_string(j) + " = " + E.at(j).get_str();
    }
    note = "1, 0, -1, 0, 5, 0, -61, 0, 1385";
    return {};
  }});

  checks.push_back({"06 euler recurrence closure through E" + std::to_string(E.max_index()),
                    [&E](std::string& note) -> std::string {
    for (std::size_t j = 1; j <= E.max_index(); j += 2) {
      if (E.at(j) != 0) return "E_" + std::to_string(j) + " is nonzero";
    }
    for (std::size_t n = 1; 2 * n <= E.max_index(); ++n) {
      BigInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += binomial(2 * n, 2 * k) * E.at(2 * k);
      if (sum != 0) return "sum_k C(" + std::to_string(2 * n) + ",2k) E_2k = " + sum.get_str();
    }
    note = "odd entries vanish, cosh * sech = 1 degreewise";
    return {};
  }});

  checks.push_back({"07 euler series-division oracle through E" + std::to_string(E.max_index()),
                    [&E](std::string& note) -> std::string {
    const auto ref = oracle::euler_by_series_division(E.max_index());
    for (std::size_t j = 0; j <= E.max_index(); ++j) {
      if (ref[j] != E.at(j)) return "E_" + std::to_string(j) + ": table " + E.at(j).get_str() + ", oracle " + ref[j].get_str();
    }
    note = "table equals 1/cosh series";
    return {};
  }});

  checks.push_back({"08 euler cf convergents depth" + le(static_cast<int>(lim.cf_depth)),
                    [&E, lim](std::string& note) -> std::string {
    for (std::size_t d = 1; d <= lim.cf_depth; ++d) {
      const auto cf = cf_convergent(d, 2 * d);
      const auto ref = euler_abs_series(E, 2 * d);
      if (!(cf == ref)) return "depth " + std::to_string(d) + " disagrees with |E| series";
    }
    note = "depth d matches through z^(2d)";
    return {};
  }});

  checks.push_back({"09 dirichlet beta(1), beta(3), beta(5)", [&E](std::string& note) -> std::string {
    const Rational expect[] = {Rational(1, 4), Rational(1, 32), Rational(5, 1536)};
    for (unsigned l = 0; l < 3; ++l) {
      const auto b = dirichlet_beta_coeff(E, l);
      if (b.coeff != expect[l]) return "beta(" + std::to_string(2 * l + 1) + ") coefficient " + b.coeff.to_string();
    }
    std::ostringstream os;
    for (unsigned l = 0; l <= 4; ++l) {
      const auto b = dirichlet_beta_coeff(E, l);
      const double exact = b.coeff.to_double() * oracle::pi_power(2 * l + 1);
      const double numeric = oracle::dirichlet_beta_numeric(2 * l + 1);
      if (std::abs(exact - numeric) > 1e-8) {
        os << "beta(" << 2 * l + 1 << "): closed form " << exact << ", numeric " << numeric;
        return os.str();
      }
    }
    note = "pi/4, pi^3/32, 5pi^5/1536; numeric agreement within 1e-8 for l <= 4";
    return {};
  }});

  checks.push_back({"10 relation polynomials r_{0,1..9}", [&E](std::string& note) -> std::string {
    const std::pair<int, ABPoly> expect[] = {
        {1, ABPoly::one()},
        {3, ABPoly::term(1, 1, 0)},
        {5, ABPoly::term(1, 2, 0) - ABPoly::term(1, 0, 1)},
        {7, ABPoly::term(1, 3, 0) - ABPoly::term(5, 1, 1)},
        {9, ABPoly::term(1, 4, 0) - ABPoly::term(14, 2, 1) + ABPoly::term(9, 0, 2)},
    };
    for (const auto& [n, r] : expect) {
      if (relation_recurrence(n) != r) return "recurrence r_{0," + std::to_string(n) + "} = " + relation_recurrence(n).to_string();
      if (n >= 3 && relation_hankel(n, E) != r) {
        return "Hankel r_{0," + std::to_string(n) + "} = " + relation_hankel(n, E).to_string();
      }
    }
    note = "1, alpha, alpha^2 - beta, alpha^3 - 5 alpha beta, alpha^4 - 14 alpha^2 beta + 9 beta^2";
    return {};
  }});

  checks.push_back({"11 hankel=recurrence n" + le(lim.relation_points), [&E, lim](std::string& note) -> std::string {
    for (int n = 3; n <= lim.relation_points; n += 2) {
      if (relation_hankel(n, E) != relation_recurrence(n)) return "differ at n=" + std::to_string(n);
    }
    note = "odd n in [3, " + std::to_string(lim.relation_points) + "]";
    return {};
  }});

  checks.push_back({"12 hankel kernels one-dimensional n" + le(lim.relation_points),
                    [&E, lim](std::string& note) -> std::string {
    for (int n = 3; n <= lim.relation_points; n += 2) {
      const std::size_t m = (n - 1) / 2;
      const auto ms = MomentSequence::euler(E, 2 * m + 1);
      const auto dim = kernel(hankel(ms, m, m % 2)).size();
      if (dim != 1) return "kernel dimension " + std::to_string(dim) + " at n=" + std::to_string(n);
    }
    note = "unique up to scale";
    return {};
  }});

  checks.push_back({"13 orthopoly euler alpha_k=0 beta_k=k^2", [&E, lim](std::string& note) -> std::string {
    const std::size_t K = lim.ortho_degree + 1;
    const auto ops = gram_schmidt_ortho(MomentSequence::euler(E, 2 * K + 1), K);
    const auto tt = three_term_coeffs(ops);
    for (std::size_t k = 0; k < tt.alphas.size(); ++k) {
      if (!tt.alphas[k].is_zero()) return "alpha_" + std::to_string(k) + " = " + tt.alphas[k].to_string();
    }
    for (std::size_t k = 1; k <= tt.betas.size(); ++k) {
      if (tt.betas[k - 1] != Rational(static_cast<long>(k * k))) {
        return "beta_" + std::to_string(k) + " = " + tt.betas[k - 1].to_string();
      }
    }
    note = "k < " + std::to_string(K);
    return {};
  }});

  checks.push_back({"14 orthopoly p_m = r_{0,2m+1}(x,1) m" + le(static_cast<int>(lim.ortho_degree)),
                    [&E, lim](std::string& note) -> std::string {
    const std::size_t K = lim.ortho_degree;
    const auto ops = gram_schmidt_ortho(MomentSequence::euler(E, 2 * K + 1), K);
    for (std::size_t m = 0; m <= K; ++m) {
      const UniPoly s = relation_recurrence(static_cast<int>(2 * m + 1)).dehomogenize();
      if (ops.polys[m] != s) return "p_" + std::to_string(m) + " = " + ops.polys[m].to_string() + ", s_m = " + s.to_string();
    }
    note = "Gram-Schmidt on |E| moments";
    return {};
  }});

  checks.push_back({"15 cf vs moments depth" + le(static_cast<int>(lim.cf_depth)),
                    [&E, lim](std::string& note) -> std::string {
    const auto ms = MomentSequence::euler(E, 2 * lim.cf_depth + 3);
    for (std::size_t d = 1; d <= lim.cf_depth; ++d) {
      const auto v = cf_vs_moments(ms, d);
      if (!v.match) return "depth " + std::to_string(d) + " first mismatch at x^" + std::to_string(*v.first_mismatch);
    }
    note = "J-fraction reproduces the moments";
    return {};
  }});

  checks.push_back({"16 pairing orthogonality n" + le(lim.relation_points), [&E, lim](std::string& note) -> std::string {
    std::size_t total = 0;
    for (int n = 3; n <= lim.relation_points; n += 2) {
      for (const char* route : {"hankel", "recurrence"}) {
        const auto v = route[0] == 'h' ? hankel_orthogonality_check(n, E)
                                       : pairing_orthogonality_check(relation_recurrence(n), n, E);
        if (!v.ok) {
          return std::string(route) + " r_{0," + std::to_string(n) + "} pairs to " + v.violating_value.to_string() +
                 " with alpha^" + std::to_string(v.violating->first) + " beta^" + std::to_string(v.violating->second);
        }
        total += v.pairings_checked;
      }
    }
    note = std::to_string(total) + " complementary pairings vanish";
    return {};
  }});

  {
    std::string pts;
    for (int n : lim.hilbert_points) pts += (pts.empty() ? "" : ",") + std::to_string(n);
    checks.push_back({"17 hilbert quotient = betti n∈{" + pts + "}", [lim](std::string& note) -> std::string {
      for (int n : lim.hilbert_points) {
        const auto dims = hilbert_series_quotient(n, hilbert_default_max_degree(n));
        const auto P = poincare_closed(ModuliParams(0, n));
        for (std::size_t d = 0; d < dims.size(); ++d) {
          if (Rational(static_cast<long>(dims[d])) != P.coeff(d)) {
            return "n=" + std::to_string(n) + " degree " + std::to_string(d) + ": quotient " + std::to_string(dims[d]) +
                   ", betti " + P.coeff(d).to_string();
          }
        }
      }
      note = "presentation has the right Hilbert series";
      return {};
    }});
  }

  checks.push_back({"18 basis counts = betti, palindromic n" + le(lim.basis_points),
                    [lim](std::string& note) -> std::string {
    for (int n = 3; n <= lim.basis_points; n += 2) {
      const auto counts = basis_degree_counts(n);
      const auto P = poincare_closed(ModuliParams(0, n));
      for (std::size_t d = 0; d < counts.size(); ++d) {
        if (Rational(counts[d]) != P.coeff(d)) return "n=" + std::to_string(n) + " degree " + std::to_string(d);
        if (counts[d] != counts[counts.size() - 1 - d]) return "n=" + std::to_string(n) + " not palindromic";
      }
    }
    note = "S_{0,n} degree counts";
    return {};
  }});

  checks.push_back({"19 symplectic volumes", [&E, lim](std::string& note) -> std::string {
    const std::tuple<int, int, Rational> expect[] = {{0, 3, Rational(1)}, {0, 5, Rational(1, 2)}, {1, 1, Rational(1, 2)}};
    for (const auto& [g, n, v] : expect) {
      const auto got = symplectic_volume(g, n, E);
      if (got != v) return "volume(" + std::to_string(g) + "," + std::to_string(n) + ") = " + got.to_string();
    }
    const auto ref = oracle::euler_by_series_division(E.max_index());
    std::size_t count = 0;
    for (int g = 0; g <= lim.volume_genus; ++g) {
      for (int n = 1; n <= lim.volume_points; n += 2) {
        const int top = 3 * g + n - 3;
        if (top < 0) continue;
        const Rational scaled = symplectic_volume(g, n, E) * Rational(pow2(top) * factorial(g)) / Rational(factorial(top));
        if (scaled != Rational(::abs(ref[2 * g + n - 3]))) {
          return "(" + std::to_string(g) + "," + std::to_string(n) + ") scaled volume " + scaled.to_string();
        }
        ++count;
      }
    }
    note = "1, 1/2, 1/2; " + std::to_string(count) + " scaled volumes are |E_{2g+n-3}|";
    return {};
  }});

  checks.push_back({"20 genus-0 structural checks n" + le(lim.betti_points), [lim](std::string& note) -> std::string {
    for (int n = 3; n <= lim.betti_points; n += 2) {
      const auto rep = structural_checks(ModuliParams(0, n));
      for (const auto& c : rep.checks) {
        if (!c.passed) return "n=" + std::to_string(n) + " " + c.name + ": " + c.detail;
      }
    }
    note = "duality, b0, b2, monomial counts to the middle dimension";
    return {};
  }});

  return checks;
}

}  // namespace

VerificationReport verify_suite(const VerifyOptions& opts) {
  EulerTable E = euler_numbers(kVerifyEulerMax);
  if (opts.inject_euler_fault) {
    const std::size_t j = *opts.inject_euler_fault;
    if (j > kVerifyEulerMax) throw DomainError("fault index must be <= " + std::to_string(kVerifyEulerMax));
    E = E.with_entry(j, E.at(j) + 1);
  }
  const auto checks = build_checks(E, limits_for(opts.scope));

  VerificationReport report;
  report.checks.resize(checks.size());
  const auto count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    CheckResult& r = report.checks[i];
    r.name = checks[i].name;
    std::string note;
    try {
      const std::string failure = checks[i].run(note);
      r.passed = failure.empty();
      r.detail = r.passed ? note : failure;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
  }
  std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return report;
}

}  // namespace parmod
