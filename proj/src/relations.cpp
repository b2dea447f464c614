#include "parmod/relations.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <sstream>

#include "parmod/errors.hpp"
#include "parmod/matrix.hpp"
#include "parmod/orthopoly.hpp"
#include "parmod/sparse.hpp"

namespace parmod {

namespace {

void require_odd_points(int n, int min_n = 1) {
  if (n < min_n || n % 2 == 0) {
    throw DomainError("n must be odd and >= " + std::to_string(min_n) + ", got " + std::to_string(n));
  }
  if (n > 63) throw DomainError("n > 63 is not supported");
}

std::string power(const char* var, unsigned e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- ABPoly

ABPoly ABPoly::term(const Rational& c, unsigned a, unsigned b) {
  ABPoly p;
  p.add({a, b}, c);
  return p;
}

void ABPoly::add(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational ABPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational() : it->second;
}

std::optional<unsigned> ABPoly::homogeneous_degree() const {
  std::optional<unsigned> deg;
  for (const auto& [e, c] : terms_) {
    const unsigned d = 2 * e.first + 4 * e.second;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

UniPoly ABPoly::dehomogenize() const {
  UniPoly out;
  for (const auto& [e, c] : terms_) out += UniPoly::monomial(c, e.first);
  return out;
}

ABPoly& ABPoly::operator+=(const ABPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ABPoly& ABPoly::operator-=(const ABPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ABPoly operator*(const ABPoly& x, const ABPoly& y) {
  ABPoly out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) out.add({ex.first + ey.first, ex.second + ey.second}, cx * cy);
  }
  return out;
}

ABPoly operator*(const Rational& c, const ABPoly& x) {
  ABPoly out;
  for (const auto& [e, v] : x.terms_) out.add(e, c * v);
  return out;
}

std::string ABPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending alpha exponent
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e.first == 0 && e.second == 0;
    if (constant || mag != Rational(1)) os << mag << (constant ? "" : " ");
    if (e.first > 0) os << power("alpha", e.first);
    if (e.first > 0 && e.second > 0) os << " ";
    if (e.second > 0) os << power("beta", e.second);
  }
  return os.str();
}

// -------------------------------------------------------------- Monomial

unsigned Monomial::delta_count() const { return static_cast<unsigned>(std::popcount(J)); }

Monomial operator*(const Monomial& x, const Monomial& y) {
  const std::uint64_t shared = x.J & y.J;
  return {x.a + y.a, x.b + y.b + static_cast<unsigned>(std::popcount(shared)), x.J ^ y.J};
}

std::string Monomial::to_string() const {
  std::vector<std::string> parts;
  if (a > 0) parts.push_back(power("alpha", a));
  if (b > 0) parts.push_back(power("beta", b));
  for (unsigned k = 0; k < 64; ++k) {
    if (J & (std::uint64_t{1} << k)) parts.push_back("delta_" + std::to_string(k + 1));
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

// ------------------------------------------------------- relation polys

ABPoly relation_recurrence(int n) {
  require_odd_points(n);
  ABPoly prev = ABPoly::one();          // r_{0,1}
  if (n == 1) return prev;
  ABPoly cur = ABPoly::term(1, 1, 0);   // r_{0,3}
  for (int m = 1; 2 * m + 1 < n; ++m) {
    ABPoly next = ABPoly::term(1, 1, 0) * cur - ABPoly::term(Rational(static_cast<long>(m) * m), 0, 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ABPoly relation_hankel(int n, const EulerTable& table) {
  require_odd_points(n);
  const auto m = static_cast<std::size_t>((n - 1) / 2);
  const std::size_t e = m % 2;
  const auto ms = MomentSequence::euler(table, std::min<std::size_t>(table.size(), 2 * m + 1));
  const RationalMatrix h = hankel(ms, m, e);
  const auto basis = kernel(h);
  if (basis.size() != 1) {
    throw KernelDimensionError("Hankel kernel for n=" + std::to_string(n) + " has dimension " +
                               std::to_string(basis.size()));
  }
  const RationalVector& v = basis.front();
  const std::size_t top = m / 2;
  ABPoly r;
  for (std::size_t j = 0; j < v.size(); ++j) {
    r += ABPoly::term(v[j], static_cast<unsigned>(e + 2 * j), static_cast<unsigned>(top - j));
  }
  const Rational lead = r.coeff(static_cast<unsigned>(m), 0);
  if (lead.is_zero()) throw KernelDimensionError("Hankel kernel vector has no alpha^m term");
  return lead.inverse() * r;
}

ABPoly relation_hankel(int n) { return relation_hankel(n, euler_numbers(std::max(n, 1))); }

std::vector<std::pair<Monomial, Rational>> RelationGenerator::expand() const {
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& [e, c] : factor.terms()) out.emplace_back(Monomial{e.first, e.second, J}, c);
  return out;
}

namespace {

template <class F>
void for_each_subset(int n, int size, F&& f) {
  if (size == 0) {
    f(std::uint64_t{0});
    return;
  }
  if (size > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t s = (std::uint64_t{1} << size) - 1;
  while (s < limit) {
    f(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

RelationSet relation_set(int n) {
  require_odd_points(n);
  RelationSet rs{n, {}};
  const int m = (n - 1) / 2;
  for (int s = 0; s <= m; ++s) {
    const ABPoly factor = relation_recurrence(n - 2 * s);
    for_each_subset(n, s, [&](std::uint64_t J) { rs.generators.push_back({J, factor}); });
  }
  return rs;
}

// --------------------------------------------------- pairings / volumes

Rational pairing_ab(int g, int n, int r, int s, const EulerTable& table) {
  require_odd_points(n);
  if (g < 0 || r < 0 || s < 0) throw DomainError("pairing exponents must be non-negative");
  const int top = 3 * g + n - 3;
  if (r + 2 * s != top) {
    throw DegreeMismatch("r + 2s = " + std::to_string(r + 2 * s) + " but the top degree is " + std::to_string(top));
  }
  if (r < g) throw DomainError("pairing formula needs r >= g");
  return Rational(factorial(r) / factorial(r - g) * table.magnitude(r - g));
}

Rational pairing_ab(int g, int n, int r, int s) {
  return pairing_ab(g, n, r, s, euler_numbers(std::max(r - g, 0)));
}

Rational symplectic_volume(int g, int n, const EulerTable& table) {
  require_odd_points(n);
  if (g < 0) throw DomainError("genus must be >= 0");
  const int top = 3 * g + n - 3;
  if (top < 0) throw DomainError("3g + n - 3 < 0");
  return Rational(factorial(top) * table.magnitude(2 * g + n - 3), pow2(top) * factorial(g));
}

Rational symplectic_volume(int g, int n) {
  return symplectic_volume(g, n, euler_numbers(std::max(2 * g + n - 3, 0)));
}

OrthogonalityVerdict hankel_orthogonality_check(int n, const EulerTable& table) {
  require_odd_points(n);
  return pairing_orthogonality_check(relation_hankel(n, table), n, table);
}

OrthogonalityVerdict pairing_orthogonality_check(const ABPoly& r, int n, const EulerTable& table) {
  require_odd_points(n);
  const int m = (n - 1) / 2;
  OrthogonalityVerdict v;
  for (int s2 = 0; 2 * s2 <= m - 2; ++s2) {
    const int r2 = m - 2 - 2 * s2;
    Rational sum;
    for (const auto& [e, c] : r.terms()) {
      sum += c * pairing_ab(0, n, static_cast<int>(e.first) + r2, static_cast<int>(e.second) + s2, table);
    }
    ++v.pairings_checked;
    if (!sum.is_zero() && v.ok) {
      v.ok = false;
      v.violating = {static_cast<unsigned>(r2), static_cast<unsigned>(s2)};
      v.violating_value = sum;
    }
  }
  return v;
}

OrthogonalityVerdict hankel_orthogonality_check(int n) {
  return hankel_orthogonality_check(n, euler_numbers(std::max(n, 1)));
}

// ------------------------------------------------------- basis / counts

std::vector<Monomial> monomials_of_degree(int n, unsigned degree) {
  std::vector<Monomial> out;
  if (degree % 2 != 0) return out;
  const int half = static_cast<int>(degree / 2);
  for (int j = 0; j <= std::min(n, half); ++j) {
    const int rest = half - j;
    for_each_subset(n, j, [&](std::uint64_t J) {
      for (int b = 0; 2 * b <= rest; ++b) {
        out.push_back({static_cast<unsigned>(rest - 2 * b), static_cast<unsigned>(b), J});
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> basis_enumeration(int n) {
  require_odd_points(n, 3);
  const unsigned m = static_cast<unsigned>((n - 1) / 2);
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= static_cast<unsigned>(2 * n - 6); d += 2) {
    for (const Monomial& mono : monomials_of_degree(n, d)) {
      if (mono.weight() < m) out.push_back(mono);
    }
  }
  return out;
}

std::vector<BigInt> basis_degree_counts(int n) {
  require_odd_points(n, 3);
  const int m = (n - 1) / 2;
  std::vector<BigInt> counts(2 * n - 5, BigInt(0));
  for (int j = 0; j < m; ++j) {
    for (int a = 0; a + j < m; ++a) {
      for (int b = 0; a + b + j < m; ++b) counts[2 * a + 4 * b + 2 * j] += binomial(n, j);
    }
  }
  return counts;
}

// ------------------------------------------------ degreewise quotient

namespace {

struct DegreeSystem {
  std::vector<Monomial> columns;
  std::map<Monomial, std::uint32_t> index;
  SparseEliminator elim;

  explicit DegreeSystem(std::vector<Monomial> cols) : columns(std::move(cols)), elim(columns.size()) {
    for (std::uint32_t i = 0; i < columns.size(); ++i) index.emplace(columns[i], i);
  }
};

void check_hilbert_domain(int n, const HilbertOptions& opts) {
  require_odd_points(n, 3);
  if (n > 9 && !opts.force) {
    throw ResourceLimit("quotient ranks for n = " + std::to_string(n) + " > 9 need force");
  }
}

// Columns: monomials outside S_{0,n} first so they are preferred as pivots.
DegreeSystem build_degree_system(int n, unsigned degree, const HilbertOptions& opts) {
  const unsigned m = static_cast<unsigned>((n - 1) / 2);
  std::vector<Monomial> monos = monomials_of_degree(n, degree);
  std::stable_partition(monos.begin(), monos.end(), [m](const Monomial& x) { return x.weight() >= m; });
  DegreeSystem sys(std::move(monos));

  if (degree < 2 * m) return sys;  // every generator has degree 2m
  const std::vector<Monomial> multipliers = monomials_of_degree(n, degree - 2 * m);
  const RelationSet rs = relation_set(n);
  if (multipliers.size() * rs.generators.size() * std::max<std::size_t>(sys.columns.size(), 1) >
      opts.max_entries) {
    throw ResourceLimit("degree " + std::to_string(degree) + " system has " +
                        std::to_string(multipliers.size() * rs.generators.size()) + " x " +
                        std::to_string(sys.columns.size()) + " entries, limit " + std::to_string(opts.max_entries));
  }

  std::vector<std::vector<std::pair<Monomial, Rational>>> gens;
  gens.reserve(rs.generators.size());
  for (const auto& g : rs.generators) gens.push_back(g.expand());

  SparseRow row;
  for (const Monomial& u : multipliers) {
    for (const auto& terms : gens) {
      if (sys.elim.full()) return sys;
      row.clear();
      for (const auto& [mono, c] : terms) row.emplace_back(sys.index.at(u * mono), c);
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      SparseRow merged;
      for (auto& entry : row) {
        if (!merged.empty() && merged.back().first == entry.first) {
          merged.back().second += entry.second;
          if (merged.back().second.is_zero()) merged.pop_back();
        } else {
          merged.push_back(entry);
        }
      }
      sys.elim.insert(merged);
    }
  }
  return sys;
}

template <bool Parallel>
std::vector<std::size_t> hilbert_impl(int n, int max_degree, const HilbertOptions& opts) {
  check_hilbert_domain(n, opts);
  if (max_degree < 0) return {};
  std::vector<std::size_t> dims(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<std::exception_ptr> errors(dims.size());
  const int half = max_degree / 2;

  // Highest degrees are the most expensive, so they are handed out first.
#pragma omp parallel for schedule(dynamic, 1) if (Parallel)
  for (int k = half; k >= 0; --k) {
    try {
      dims[2 * k] = hilbert_quotient_dimension(n, static_cast<unsigned>(2 * k), opts);
    } catch (...) {
      errors[2 * k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return dims;
}

}  // namespace

std::size_t hilbert_quotient_dimension(int n, unsigned degree, const HilbertOptions& opts) {
  check_hilbert_domain(n, opts);
  if (degree % 2 != 0) return 0;
  const DegreeSystem sys = build_degree_system(n, degree, opts);
  return sys.columns.size() - sys.elim.rank();
}

std::vector<std::size_t> hilbert_series_quotient(int n, int max_degree, const HilbertOptions& opts) {
  return hilbert_impl<true>(n, max_degree, opts);
}

std::vector<std::size_t> hilbert_series_quotient_serial(int n, int max_degree, const HilbertOptions& opts) {
  return hilbert_impl<false>(n, max_degree, opts);
}

ReductionWitness reduction_witness(int n, const Monomial& mono, const HilbertOptions& opts) {
  check_hilbert_domain(n, opts);
  if (n < 64 && (mono.J >> n) != 0) throw DomainError("monomial uses a delta index above n");
  if (static_cast<int>(mono.degree()) > 2 * n - 6) {
    throw DomainError("monomial degree " + std::to_string(mono.degree()) + " exceeds 2n-6");
  }
  const unsigned m = static_cast<unsigned>((n - 1) / 2);
  const DegreeSystem sys = build_degree_system(n, mono.degree(), opts);
  const SparseRow rem = sys.elim.reduce({{sys.index.at(mono), Rational(1)}});

  ReductionWitness w{mono, mono.weight() < m, {}};
  for (const auto& [col, c] : rem) {
    const Monomial& x = sys.columns[col];
    if (x.weight() >= m) {
      throw NotReducible(mono.to_string() + " leaves " + x.to_string() + " outside the basis after reduction");
    }
    w.combination.emplace_back(x, c);
  }
  return w;
}

std::string ReductionWitness::to_string() const {
  if (combination.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : combination) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    if (c.abs() != Rational(1)) os << c.abs() << " ";
    os << x.to_string();
  }
  return os.str();
}

}  // namespace parmod
