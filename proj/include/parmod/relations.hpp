#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parmod/euler.hpp"
#include "parmod/poly.hpp"
#include "parmod/rational.hpp"

namespace parmod {

/// Polynomial in alpha (degree 2) and beta (degree 4).
class ABPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (a, b)

  ABPoly() = default;
  static ABPoly one() { return term(1, 0, 0); }
  static ABPoly term(const Rational& c, unsigned a, unsigned b);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(unsigned a, unsigned b) const;
  bool is_zero() const { return terms_.empty(); }

  /// Common graded degree 2a + 4b of all terms, nullopt if inhomogeneous or zero.
  std::optional<unsigned> homogeneous_degree() const;

  /// p(x, 1) as a polynomial in x.
  UniPoly dehomogenize() const;

  ABPoly& operator+=(const ABPoly& o);
  ABPoly& operator-=(const ABPoly& o);
  friend ABPoly operator+(ABPoly a, const ABPoly& b) { return a += b; }
  friend ABPoly operator-(ABPoly a, const ABPoly& b) { return a -= b; }
  friend ABPoly operator*(const ABPoly& a, const ABPoly& b);
  friend ABPoly operator*(const Rational& c, const ABPoly& a);

  friend bool operator==(const ABPoly&, const ABPoly&) = default;

  /// e.g. "alpha^4 - 14 alpha^2 beta + 9 beta^2"
  std::string to_string() const;

 private:
  void add(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

/// alpha^a beta^b prod_{k in J} delta_k with J a subset of {1..n}, stored as
/// a bitmask (bit k-1 for delta_k). delta_k^2 is folded into beta on
/// multiplication, so J is always squarefree.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;
  std::uint64_t J = 0;

  unsigned delta_count() const;
  unsigned degree() const { return 2 * a + 4 * b + 2 * delta_count(); }
  /// a + b + |J|, the quantity bounding the basis S_{0,n}.
  unsigned weight() const { return a + b + delta_count(); }

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;
};

/// r_{0,n} by r_{0,2m+3} = alpha r_{0,2m+1} - m^2 beta r_{0,2m-1}.
ABPoly relation_recurrence(int n);

/// r_{0,n} from the one-dimensional kernel of the Hankel matrix of |E|
/// moments, normalized monic in alpha. Throws KernelDimensionError when the
/// kernel is not one-dimensional.
ABPoly relation_hankel(int n);
ABPoly relation_hankel(int n, const EulerTable& table);

struct RelationGenerator {
  std::uint64_t J = 0;
  ABPoly factor;  // r_{0, n - 2|J|}

  /// The generator as a combination of monomials.
  std::vector<std::pair<Monomial, Rational>> expand() const;
};

/// R^J = r_{0,n-2|J|} delta^J for every |J| <= m, by increasing |J| then mask.
struct RelationSet {
  int n = 0;
  std::vector<RelationGenerator> generators;
};

RelationSet relation_set(int n);

/// <alpha^r beta^s, R_{g,n}> = r!/(r-g)! |E_{r-g}| for r + 2s = 3g + n - 3.
Rational pairing_ab(int g, int n, int r, int s);
Rational pairing_ab(int g, int n, int r, int s, const EulerTable& table);

/// (3g+n-3)! / (2^(3g+n-3) g!) |E_{2g+n-3}|
Rational symplectic_volume(int g, int n);
Rational symplectic_volume(int g, int n, const EulerTable& table);

struct OrthogonalityVerdict {
  bool ok = true;
  std::size_t pairings_checked = 0;
  std::optional<std::pair<unsigned, unsigned>> violating;  // (r', s')
  Rational violating_value;
};

/// Pairs r_{0,n} (Hankel route) with every alpha^r' beta^s' of complementary
/// degree and checks each sum vanishes.
OrthogonalityVerdict hankel_orthogonality_check(int n);
OrthogonalityVerdict hankel_orthogonality_check(int n, const EulerTable& table);
/// Same pairing test for an arbitrary degree-(n-1) polynomial r.
OrthogonalityVerdict pairing_orthogonality_check(const ABPoly& r, int n, const EulerTable& table);

/// All monomials of the given degree in alpha, beta, delta_1..delta_n.
std::vector<Monomial> monomials_of_degree(int n, unsigned degree);

/// S_{0,n}: monomials with a + b + |J| < m, sorted by degree then value.
std::vector<Monomial> basis_enumeration(int n);

/// Per t-degree (0..2n-6) size of S_{0,n}, counted by (a, b, |J|) classes
/// without materializing the monomials; usable for large n.
std::vector<BigInt> basis_degree_counts(int n);

struct HilbertOptions {
  bool force = false;                        // allow n > 9
  std::size_t max_entries = 150'000'000;     // rows * cols per degree
};

/// Dimension of degree d of C[alpha, beta, delta]/(delta_k^2 - beta, R^J)
/// for d = 0..max_degree, by degreewise exact rank. Degrees are processed in
/// parallel when built with OpenMP.
std::vector<std::size_t> hilbert_series_quotient(int n, int max_degree, const HilbertOptions& opts = {});
/// Single-threaded reference for the same computation.
std::vector<std::size_t> hilbert_series_quotient_serial(int n, int max_degree, const HilbertOptions& opts = {});
/// One degree of the computation.
std::size_t hilbert_quotient_dimension(int n, unsigned degree, const HilbertOptions& opts = {});

/// Default upper degree: one guard degree past the top degree 2n - 6.
inline int hilbert_default_max_degree(int n) { return 2 * n - 4; }

/// A monomial rewritten modulo the relation ideal as a combination of basis
/// monomials from S_{0,n}.
struct ReductionWitness {
  Monomial input;
  bool in_basis = false;
  std::vector<std::pair<Monomial, Rational>> combination;

  std::string to_string() const;
};

ReductionWitness reduction_witness(int n, const Monomial& mono, const HilbertOptions& opts = {});

}  // namespace parmod
