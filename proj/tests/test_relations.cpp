#include <doctest.h>

#include <bit>
#include <set>

#include "parmod/betti.hpp"
#include "parmod/errors.hpp"
#include "parmod/oracles.hpp"
#include "parmod/relations.hpp"

using namespace parmod;

namespace {

ABPoly alpha() { return ABPoly::term(1, 1, 0); }
ABPoly beta() { return ABPoly::term(1, 0, 1); }
Monomial delta(unsigned k) { return {0, 0, std::uint64_t{1} << (k - 1)}; }

std::vector<BigInt> counts_by_degree(const std::vector<Monomial>& basis, int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(2 * n - 5), 0);
  for (const auto& x : basis) out.at(x.degree()) += 1;
  return out;
}

}  // namespace

TEST_CASE("abpoly arithmetic and printing") {
  const ABPoly p = alpha() * alpha() - beta();
  CHECK(p.to_string() == "alpha^2 - beta");
  CHECK(p.homogeneous_degree() == 4u);
  CHECK_FALSE((alpha() + beta()).homogeneous_degree().has_value());
  CHECK(p.dehomogenize() == UniPoly{-1, 0, 1});
  CHECK((p - p).is_zero());
  CHECK((Rational(3) * p).coeff(0, 1) == Rational(-3));
}

TEST_CASE("monomial products fold delta squares into beta") {
  const Monomial x = delta(1) * delta(2);
  CHECK(x.J == 3u);
  CHECK(x.degree() == 4);
  const Monomial y = x * delta(1);
  CHECK(y.b == 1);
  CHECK(y.J == 2u);
  CHECK(y.degree() == 6);
  CHECK((Monomial{1, 0, 0} * Monomial{0, 2, 0}).to_string() == "alpha beta^2");
  CHECK(Monomial{}.to_string() == "1");
}

TEST_CASE("relation polynomials by recurrence") {
  CHECK(relation_recurrence(1) == ABPoly::one());
  CHECK(relation_recurrence(3) == alpha());
  CHECK(relation_recurrence(5) == alpha() * alpha() - beta());
  CHECK(relation_recurrence(7).to_string() == "alpha^3 - 5 alpha beta");
  CHECK(relation_recurrence(9).to_string() == "alpha^4 - 14 alpha^2 beta + 9 beta^2");
  CHECK(relation_recurrence(9) == alpha() * relation_recurrence(7) - Rational(9) * beta() * relation_recurrence(5));
  CHECK_THROWS_AS(relation_recurrence(4), DomainError);
}

TEST_CASE("relation polynomials are homogeneous and monic") {
  for (int n = 1; n <= 21; n += 2) {
    const ABPoly r = relation_recurrence(n);
    const unsigned m = static_cast<unsigned>((n - 1) / 2);
    CHECK(r.homogeneous_degree() == 2 * m);
    CHECK(r.coeff(m, 0) == Rational(1));
  }
}

TEST_CASE("hankel route equals recurrence route") {
  CHECK(relation_hankel(5) == alpha() * alpha() - beta());
  CHECK(relation_hankel(9).to_string() == "alpha^4 - 14 alpha^2 beta + 9 beta^2");
  for (int n = 3; n <= 17; n += 2) {
    CAPTURE(n);
    CHECK(relation_hankel(n) == relation_recurrence(n));
  }
  CHECK(relation_hankel(1) == ABPoly::one());
  CHECK_THROWS_AS(relation_hankel(4), DomainError);
}

TEST_CASE("hankel kernel with a corrupted table moves off the recurrence") {
  const auto bad = euler_numbers(24).with_entry(6, BigInt(-62));
  CHECK_FALSE(relation_hankel(9, bad) == relation_recurrence(9));
}

TEST_CASE("relation sets") {
  const auto rs3 = relation_set(3);
  REQUIRE(rs3.generators.size() == 4);
  CHECK(rs3.generators[0].J == 0u);
  CHECK(rs3.generators[0].factor == alpha());
  for (std::size_t i = 1; i < 4; ++i) CHECK(rs3.generators[i].factor == ABPoly::one());

  const auto rs5 = relation_set(5);
  CHECK(rs5.generators.size() == 1 + 5 + 10);
  std::set<std::uint64_t> masks;
  for (const auto& g : rs5.generators) {
    masks.insert(g.J);
    const unsigned s = static_cast<unsigned>(std::popcount(g.J));
    if (s == 0) CHECK(g.factor == alpha() * alpha() - beta());
    if (s == 1) CHECK(g.factor == alpha());
    if (s == 2) CHECK(g.factor == ABPoly::one());
  }
  CHECK(masks.size() == 16);

  for (int n = 1; n <= 13; n += 2) {
    BigInt expected = 0;
    for (int s = 0; s <= (n - 1) / 2; ++s) expected += binomial(n, s);
    CHECK(BigInt(static_cast<unsigned long>(relation_set(n).generators.size())) == expected);
    for (const auto& g : relation_set(n).generators) {
      for (const auto& [mono, c] : g.expand()) CHECK(mono.degree() == static_cast<unsigned>(n - 1));
    }
  }
}

TEST_CASE("pairings") {
  CHECK(pairing_ab(0, 5, 2, 0) == Rational(1));
  CHECK(pairing_ab(0, 5, 0, 1) == Rational(1));
  CHECK(pairing_ab(1, 3, 3, 0) == Rational(3));
  for (int n = 3; n <= 15; n += 2) CHECK(pairing_ab(0, n, n - 3, 0) == Rational(euler_numbers(n).magnitude(n - 3)));
  CHECK_THROWS_AS(pairing_ab(0, 5, 1, 0), DegreeMismatch);
  CHECK_THROWS_AS(pairing_ab(2, 3, 0, 3), DomainError);
}

TEST_CASE("symplectic volumes") {
  CHECK(symplectic_volume(0, 3) == Rational(1));
  CHECK(symplectic_volume(0, 5) == Rational(1, 2));
  CHECK(symplectic_volume(1, 1) == Rational(1, 2));
  const auto E = euler_numbers(30);
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 11; n += 2) {
      const int D = 3 * g + n - 3;
      if (D < 0) continue;
      const Rational scaled = symplectic_volume(g, n) * Rational(pow2(D) * factorial(g), factorial(D));
      CHECK(scaled == Rational(E.magnitude(2 * g + n - 3)));
    }
  }
  CHECK_THROWS_AS(symplectic_volume(0, 1), DomainError);
}

TEST_CASE("orthogonality pairings vanish") {
  const auto v5 = hankel_orthogonality_check(5);
  CHECK(v5.ok);
  CHECK(v5.pairings_checked == 1);
  CHECK(hankel_orthogonality_check(7).ok);
  const auto v9 = hankel_orthogonality_check(9);
  CHECK(v9.ok);
  // complementary degree r' + 2s' = 2: alpha^2 and beta
  CHECK(v9.pairings_checked == 2);
  for (int n = 3; n <= 17; n += 2) CHECK(hankel_orthogonality_check(n).ok);
}

TEST_CASE("orthogonality check reports the violating monomial") {
  const auto E = euler_numbers(24);
  CHECK(pairing_orthogonality_check(relation_recurrence(9), 9, E).ok);
  // alpha^4 - 14 alpha^2 beta + 10 beta^2 against alpha^2: |E_6| - 14|E_4| + 10|E_2| = 61 - 70 + 10
  const ABPoly off = relation_recurrence(9) + ABPoly::term(1, 0, 2);
  const auto v = pairing_orthogonality_check(off, 9, E);
  CHECK_FALSE(v.ok);
  REQUIRE(v.violating.has_value());
  CHECK(*v.violating == std::pair<unsigned, unsigned>{2, 0});
  CHECK(v.violating_value == Rational(1));
  // The recurrence polynomial is not orthogonal for a corrupted table.
  CHECK_FALSE(pairing_orthogonality_check(relation_recurrence(9), 9, E.with_entry(6, BigInt(-62))).ok);
}

TEST_CASE("basis enumeration") {
  CHECK(counts_by_degree(basis_enumeration(3), 3) == std::vector<BigInt>{1});
  CHECK(counts_by_degree(basis_enumeration(5), 5) == std::vector<BigInt>{1, 0, 6, 0, 1});
  CHECK(counts_by_degree(basis_enumeration(7), 7) == std::vector<BigInt>{1, 0, 8, 0, 30, 0, 8, 0, 1});
  for (const auto& x : basis_enumeration(9)) CHECK(x.weight() < 4);
}

TEST_CASE("basis counts match betti numbers and are palindromic") {
  for (int n = 3; n <= 21; n += 2) {
    CAPTURE(n);
    const auto counts = basis_degree_counts(n);
    const UniPoly P = poincare_closed(ModuliParams(0, n));
    REQUIRE(counts.size() == static_cast<std::size_t>(2 * n - 5));
    for (std::size_t d = 0; d < counts.size(); ++d) {
      CHECK(Rational(counts[d]) == P.coeff(d));
      CHECK(counts[d] == counts[counts.size() - 1 - d]);
    }
    if (n <= 11) CHECK(counts_by_degree(basis_enumeration(n), n) == counts);
  }
}

TEST_CASE("monomials of a degree") {
  CHECK(monomials_of_degree(5, 0).size() == 1);
  CHECK(monomials_of_degree(5, 2).size() == 6);
  CHECK(monomials_of_degree(5, 4).size() == 17);
  CHECK(monomials_of_degree(5, 3).empty());
}

TEST_CASE("hilbert quotient reproduces the betti numbers") {
  CHECK(hilbert_series_quotient(3, 2) == std::vector<std::size_t>{1, 0, 0});
  CHECK(hilbert_series_quotient(5, 6) == std::vector<std::size_t>{1, 0, 6, 0, 1, 0, 0});
  for (int n : {3, 5, 7, 9}) {
    const int top = hilbert_default_max_degree(n);
    const auto dims = hilbert_series_quotient(n, top);
    const UniPoly P = poincare_closed(ModuliParams(0, n));
    for (int d = 0; d <= top; ++d) CHECK(Rational(static_cast<long>(dims[d])) == P.coeff(d));
  }
}

TEST_CASE("hilbert quotient agrees with the dense oracle") {
  for (int n : {3, 5, 7}) {
    for (unsigned d = 0; d <= static_cast<unsigned>(2 * n - 4); ++d) {
      CHECK(hilbert_quotient_dimension(n, d) == oracle::dense_quotient_dimension(n, d));
    }
  }
}

TEST_CASE("parallel and serial hilbert agree") {
  CHECK(hilbert_series_quotient(9, 14) == hilbert_series_quotient_serial(9, 14));
}

TEST_CASE("hilbert size guard") {
  CHECK_THROWS_AS(hilbert_series_quotient(11, 4), ResourceLimit);
  HilbertOptions tiny;
  tiny.max_entries = 10;
  CHECK_THROWS_AS(hilbert_series_quotient(7, 10, tiny), ResourceLimit);
  HilbertOptions forced;
  forced.force = true;
  const auto dims = hilbert_series_quotient(11, 4, forced);
  const UniPoly P = poincare_closed(ModuliParams(0, 11));
  for (int d = 0; d <= 4; ++d) CHECK(Rational(static_cast<long>(dims[d])) == P.coeff(d));
}

TEST_CASE("reduction witnesses") {
  const auto w1 = reduction_witness(5, Monomial{2, 0, 0});
  CHECK_FALSE(w1.in_basis);
  REQUIRE(w1.combination.size() == 1);
  CHECK(w1.combination[0].first.to_string() == "beta");
  CHECK(w1.combination[0].second == Rational(1));
  CHECK(reduction_witness(5, delta(1) * delta(2)).combination.empty());
  CHECK(reduction_witness(5, Monomial{1, 0, 1}).combination.empty());
  CHECK(reduction_witness(5, Monomial{1, 0, 1}).to_string() == "0");
  const auto wb = reduction_witness(7, Monomial{1, 0, 1});
  CHECK(wb.in_basis);
  CHECK_THROWS_AS(reduction_witness(5, Monomial{4, 0, 0}), DomainError);
}

TEST_CASE("every monomial outside the basis reduces into it") {
  for (int n : {5, 7}) {
    const int m = (n - 1) / 2;
    for (unsigned d = 0; d <= static_cast<unsigned>(2 * n - 6); d += 2) {
      for (const auto& x : monomials_of_degree(n, d)) {
        const auto w = reduction_witness(n, x);
        CHECK(w.in_basis == (static_cast<int>(x.weight()) < m));
        for (const auto& [y, c] : w.combination) CHECK(static_cast<int>(y.weight()) < m);
      }
    }
  }
}
