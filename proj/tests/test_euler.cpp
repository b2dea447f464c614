#include <doctest.h>

#include <cmath>

#include "parmod/errors.hpp"
#include "parmod/euler.hpp"
#include "parmod/oracles.hpp"

using namespace parmod;

namespace {

std::vector<std::string> strings(const EulerTable& t) {
  std::vector<std::string> out;
  for (const auto& v : t.values()) out.push_back(v.get_str());
  return out;
}

}  // namespace

TEST_CASE("euler numbers E0..E8") {
  CHECK(strings(euler_numbers(8)) == std::vector<std::string>{"1", "0", "-1", "0", "5", "0", "-61", "0", "1385"});
  CHECK(euler_numbers(1).at(1) == 0);
  CHECK(euler_numbers(0).size() == 1);
}

TEST_CASE("euler numbers beyond int64") {
  const auto t = euler_numbers(24);
  CHECK(t.at(10).get_str() == "-50521");
  CHECK(t.at(12).get_str() == "2702765");
  CHECK(t.at(20).get_str() == "370371188237525");
  CHECK(t.at(24).get_str() == "15514534163557086905");
  CHECK(t.magnitude(22).get_str() == "69348874393137901");
  CHECK_THROWS_AS(t.at(25), DomainError);
}

TEST_CASE("euler table invariants") {
  const auto t = euler_numbers(40);
  for (std::size_t j = 1; j <= 40; j += 2) CHECK(t.at(j) == 0);
  for (std::size_t j = 0; j <= 40; j += 4) CHECK(sgn(t.at(j)) == 1);
  for (std::size_t j = 2; j <= 40; j += 4) CHECK(sgn(t.at(j)) == -1);
  for (unsigned n = 1; n <= 20; ++n) {
    BigInt s = 0;
    for (unsigned k = 0; k <= n; ++k) s += binomial(2 * n, 2 * k) * t.at(2 * k);
    CHECK(s == 0);
  }
}

TEST_CASE("euler numbers equal the series-division oracle") {
  const auto t = euler_numbers(40);
  CHECK(t.values() == oracle::euler_by_series_division(40));
}

TEST_CASE("with_entry perturbs one value") {
  const auto t = euler_numbers(8);
  const auto u = t.with_entry(4, BigInt(6));
  CHECK(u.at(4) == 6);
  CHECK(u.at(6) == t.at(6));
  CHECK_FALSE(u == t);
}

TEST_CASE("euler_abs_series") {
  CHECK(euler_abs_series(4).to_poly() == UniPoly{1, 0, 1, 0, 5});
  CHECK(euler_abs_series(0).to_poly() == UniPoly{1});
  CHECK(euler_abs_series(8).to_poly() == UniPoly{1, 0, 1, 0, 5, 0, 61, 0, 1385});
  CHECK(euler_abs_series(9).order() == 9);
}

TEST_CASE("continued fraction convergents") {
  CHECK(cf_convergent(1, 2).to_poly() == UniPoly{1, 0, 1});
  CHECK(cf_convergent(2, 6).to_poly() == UniPoly{1, 0, 1, 0, 5, 0, 25});
  CHECK(cf_convergent(4, 8) == euler_abs_series(8));
  for (std::size_t d = 1; d <= 8; ++d) {
    CHECK(cf_convergent(d, 2 * d) == euler_abs_series(2 * d));
    // The next even coefficient is where a finite convergent departs.
    CHECK(cf_convergent(d, 2 * d + 2)[2 * d + 2] != euler_abs_series(2 * d + 2)[2 * d + 2]);
  }
  CHECK_THROWS_AS(cf_convergent(0, 4), DomainError);
}

TEST_CASE("dirichlet beta coefficients") {
  CHECK(dirichlet_beta_coeff(0).coeff == Rational(1, 4));
  CHECK(dirichlet_beta_coeff(1).coeff == Rational(1, 32));
  CHECK(dirichlet_beta_coeff(2).coeff == Rational(5, 1536));
  for (unsigned l = 0; l <= 10; ++l) CHECK(dirichlet_beta_coeff(l).coeff.sign() == 1);
}

TEST_CASE("dirichlet beta against the numeric oracle") {
  for (unsigned l = 0; l <= 4; ++l) {
    const double exact = dirichlet_beta_coeff(l).coeff.to_double() * oracle::pi_power(2 * l + 1);
    CHECK(std::abs(exact - oracle::dirichlet_beta_numeric(2 * l + 1)) < 1e-8);
  }
  // A wrong coefficient is caught by the same tolerance.
  const double off = (dirichlet_beta_coeff(1).coeff * Rational(33, 32)).to_double() * oracle::pi_power(3);
  CHECK(std::abs(off - oracle::dirichlet_beta_numeric(3)) > 1e-8);
}
