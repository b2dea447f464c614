#include <doctest.h>

#include <cmath>

#include "parmod/oracles.hpp"

using namespace parmod;

TEST_CASE("series-division oracle on hand values") {
  const auto e = oracle::euler_by_series_division(10);
  const std::vector<long> expected{1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521};
  REQUIRE(e.size() == expected.size());
  for (std::size_t j = 0; j < e.size(); ++j) CHECK(e[j] == expected[j]);
}

TEST_CASE("numeric beta oracle") {
  CHECK(std::abs(oracle::dirichlet_beta_numeric(1) - M_PI / 4) < 1e-9);
  CHECK(std::abs(oracle::pi_power(3) - M_PI * M_PI * M_PI) < 1e-12);
  // Catalan's constant is beta(2).
  CHECK(std::abs(oracle::dirichlet_beta_numeric(2) - 0.915965594177219015) < 1e-9);
}

TEST_CASE("brute-force monomial counts") {
  const auto c = oracle::brute_force_bgraded_counts(5, 4);
  CHECK(c == std::vector<std::size_t>{1, 0, 6, 0, 17});
  CHECK(oracle::brute_force_bgraded_counts(1, 2) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("dense quotient oracle on small cases") {
  CHECK(oracle::dense_quotient_dimension(3, 0) == 1);
  CHECK(oracle::dense_quotient_dimension(3, 2) == 0);
  const std::vector<std::size_t> p5{1, 0, 6, 0, 1, 0, 0};
  for (unsigned d = 0; d < p5.size(); ++d) CHECK(oracle::dense_quotient_dimension(5, d) == p5[d]);
  CHECK(oracle::dense_quotient_dimension(7, 4) == 30);
}
