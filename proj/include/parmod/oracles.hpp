#pragma once

// Independent reference computations. Nothing here calls the code paths it is
// used to check.

#include <cstddef>
#include <vector>

#include "parmod/rational.hpp"

namespace parmod::oracle {

/// E_0..E_max as j! times the coefficients of 1/cosh(z), by long division of
/// power series in plain GMP rationals.
std::vector<BigInt> euler_by_series_division(std::size_t max_index);

/// sum_{M>=0} (-1)^M / (2M+1)^s, averaging the last two partial sums of a
/// long alternating run.
double dirichlet_beta_numeric(unsigned s, std::size_t terms = 1'000'000);

double pi_power(unsigned k);

/// Counts monomials alpha^a beta^b delta^e (e in {0,1}^n) of each degree by
/// walking every exponent vector.
std::vector<std::size_t> brute_force_bgraded_counts(int n, int max_degree);

/// Quotient dimension in one degree from a dense matrix of all relation
/// multiples, ranked with textbook fraction arithmetic on GMP rationals.
std::size_t dense_quotient_dimension(int n, unsigned degree);

}  // namespace parmod::oracle
