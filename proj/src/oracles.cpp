#include "parmod/oracles.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <utility>

namespace parmod::oracle {

std::vector<BigInt> euler_by_series_division(std::size_t max_index) {
  // cosh z = sum z^{2k}/(2k)!
  std::vector<mpq_class> cosh(max_index + 1, 0);
  mpz_class fact = 1;
  for (std::size_t j = 0; j <= max_index; ++j) {
    if (j > 0) fact *= j;
    if (j % 2 == 0) cosh[j] = mpq_class(1, 1) / mpq_class(fact);
  }
  std::vector<mpq_class> sech(max_index + 1, 0);
  for (std::size_t k = 0; k <= max_index; ++k) {
    mpq_class acc = (k == 0) ? mpq_class(1) : mpq_class(0);
    for (std::size_t j = 1; j <= k; ++j) acc -= cosh[j] * sech[k - j];
    sech[k] = acc / cosh[0];
  }
  std::vector<BigInt> out;
  fact = 1;
  for (std::size_t j = 0; j <= max_index; ++j) {
    if (j > 0) fact *= j;
    mpq_class v = sech[j] * fact;
    v.canonicalize();
    out.push_back(v.get_num());  // integral
  }
  return out;
}

double dirichlet_beta_numeric(unsigned s, std::size_t terms) {
  long double sum = 0.0L;
  long double prev = 0.0L;
  for (std::size_t M = 0; M < terms; ++M) {
    prev = sum;
    const long double t = 1.0L / std::pow(static_cast<long double>(2 * M + 1), static_cast<long double>(s));
    sum += (M % 2 == 0) ? t : -t;
  }
  return static_cast<double>((sum + prev) / 2.0L);
}

double pi_power(unsigned k) { return std::pow(3.14159265358979323846, static_cast<double>(k)); }

std::vector<std::size_t> brute_force_bgraded_counts(int n, int max_degree) {
  std::vector<std::size_t> counts(max_degree + 1, 0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const int deltas = __builtin_popcountl(mask);
    for (int a = 0; 2 * a + 2 * deltas <= max_degree; ++a) {
      for (int b = 0; 2 * a + 4 * b + 2 * deltas <= max_degree; ++b) ++counts[2 * a + 4 * b + 2 * deltas];
    }
  }
  return counts;
}

namespace {

using Mono = std::tuple<int, int, unsigned long>;  // a, b, delta mask
using Poly = std::map<Mono, mpq_class>;

Poly mul(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      const auto& [a1, b1, j1] = mx;
      const auto& [a2, b2, j2] = my;
      const int shared = __builtin_popcountl(j1 & j2);
      out[{a1 + a2, b1 + b2 + shared, j1 ^ j2}] += cx * cy;
    }
  }
  return out;
}

// r_{0,n} expanded from scratch by its defining recurrence.
Poly r0(int n) {
  Poly prev{{{0, 0, 0UL}, mpq_class(1)}};
  if (n == 1) return prev;
  Poly cur{{{1, 0, 0UL}, mpq_class(1)}};
  for (int m = 1; 2 * m + 1 < n; ++m) {
    Poly next;
    for (const auto& [mono, c] : cur) next[{std::get<0>(mono) + 1, std::get<1>(mono), 0UL}] += c;
    for (const auto& [mono, c] : prev) next[{std::get<0>(mono), std::get<1>(mono) + 1, 0UL}] -= c * m * m;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t dense_quotient_dimension(int n, unsigned degree) {
  std::vector<Mono> basis;
  std::map<Mono, std::size_t> index;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const int deltas = __builtin_popcountl(mask);
    for (int a = 0; 2 * a + 2 * deltas <= static_cast<int>(degree); ++a) {
      const int rest = static_cast<int>(degree) - 2 * a - 2 * deltas;
      if (rest % 4 == 0) basis.emplace_back(a, rest / 4, mask);
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  const int m = (n - 1) / 2;
  std::vector<std::vector<mpq_class>> rows;
  if (static_cast<int>(degree) >= 2 * m) {
    const unsigned mult_degree = degree - 2 * m;
    for (unsigned long J = 0; J < (1UL << n); ++J) {
      const int s = __builtin_popcountl(J);
      if (s > m) continue;
      Poly gen;
      for (const auto& [mono, c] : r0(n - 2 * s)) gen[{std::get<0>(mono), std::get<1>(mono), J}] = c;
      for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        const int deltas = __builtin_popcountl(mask);
        for (int a = 0; 2 * a + 2 * deltas <= static_cast<int>(mult_degree); ++a) {
          const int rest = static_cast<int>(mult_degree) - 2 * a - 2 * deltas;
          if (rest % 4 != 0) continue;
          const Poly prod = mul(gen, Poly{{{a, rest / 4, mask}, mpq_class(1)}});
          std::vector<mpq_class> row(basis.size(), 0);
          for (const auto& [mono, c] : prod) row[index.at(mono)] += c;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return basis.size() - dense_rank(std::move(rows), basis.size());
}

}  // namespace parmod::oracle
