#include "parmod/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "parmod/betti.hpp"
#include "parmod/errors.hpp"
#include "parmod/euler.hpp"
#include "parmod/orthopoly.hpp"
#include "parmod/relations.hpp"
#include "parmod/verify.hpp"

namespace parmod::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, table };

json poly_json(const UniPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

json abpoly_json(const ABPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"alpha", it->first.first}, {"beta", it->first.second}, {"coeff", it->second.to_string()}});
  }
  return {{"polynomial", p.to_string()}, {"terms", terms}};
}

json delta_indices(std::uint64_t J) {
  json arr = json::array();
  for (unsigned k = 0; k < 64; ++k) {
    if (J & (std::uint64_t{1} << k)) arr.push_back(k + 1);
  }
  return arr;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> coeff_strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

void require_odd(int n) {
  if (n < 1 || n % 2 == 0) throw UsageError("n must be odd and >= 1 (got " + std::to_string(n) + ")");
}

void require_nonneg(const char* what, int v) {
  if (v < 0) throw UsageError(std::string(what) + " must be >= 0 (got " + std::to_string(v) + ")");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Two-column aligned rendering for --format table.
void emit_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
}

struct Params {
  std::size_t euler_max = 8;
  int genus = 0;
  int points = 1;
  std::string betti_method = "closed";
  std::string moments = "euler";
  std::size_t depth = 4;
  std::string rel_method = "recurrence";
  bool full = false;
  int max_degree = -1;
  bool force = false;
  int r = 0;
  int s = 0;
  std::string scope = "quick";
  std::optional<std::size_t> fault;
};

int cmd_euler(const Params& p, Format fmt, std::ostream& out) {
  const auto table = euler_numbers(p.euler_max);
  if (fmt == Format::json) {
    json arr = json::array();
    for (const auto& v : table.values()) arr.push_back(v.get_str());
    emit(out, arr);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t j = 0; j < table.size(); ++j) rows.emplace_back("E_" + std::to_string(j), table.at(j).get_str());
    emit_rows(out, rows);
  }
  return kExitOk;
}

int cmd_betti(const Params& p, Format fmt, std::ostream& out) {
  require_odd(p.points);
  require_nonneg("genus", p.genus);
  const ModuliParams mp(p.genus, p.points);
  if (mp.dim() < 0) throw UsageError("(g, n) = (0, 1) has negative dimension; need 6g - 6 + 2n >= 0");

  json j{{"g", mp.g}, {"n", mp.n}, {"method", p.betti_method}};
  std::vector<std::pair<std::string, std::string>> rows{{"g", std::to_string(mp.g)}, {"n", std::to_string(mp.n)}};
  int code = kExitOk;
  if (p.betti_method == "all") {
    json methods = json::object();
    std::vector<UniPoly> polys;
    for (auto m : {BettiMethod::strata, BettiMethod::closed, BettiMethod::rec_n, BettiMethod::rec_g}) {
      polys.push_back(poincare(mp, m));
      methods[to_string(m)] = poly_json(polys.back());
      rows.emplace_back(to_string(m), "[" + join(coeff_strings(polys.back()), ", ") + "]");
    }
    const bool agree = std::all_of(polys.begin(), polys.end(), [&](const UniPoly& q) { return q == polys.front(); });
    j["coefficients"] = poly_json(polys[1]);
    j["methods"] = methods;
    j["methods_agree"] = agree;
    rows.emplace_back("methods_agree", agree ? "true" : "false");
    if (!agree) code = kExitCheckFailed;
  } else {
    const UniPoly P = poincare(mp, parse_betti_method(p.betti_method));
    j["coefficients"] = poly_json(P);
    rows.emplace_back(p.betti_method, "[" + join(coeff_strings(P), ", ") + "]");
  }
  if (fmt == Format::json) emit(out, j);
  else emit_rows(out, rows);
  return code;
}

int cmd_orthopoly(const Params& p, Format fmt, std::ostream& out) {
  if (p.moments != "euler") throw UsageError("--moments supports only 'euler'");
  if (p.depth < 1) throw UsageError("--depth must be >= 1");
  const auto ms = MomentSequence::euler(2 * p.depth + 3);
  const auto ops = gram_schmidt_ortho(ms, p.depth);
  const auto tt = three_term_coeffs(ops);
  const auto cf = cf_vs_moments(ms, p.depth);

  json polys = json::array();
  json alphas = json::array();
  json betas = json::array();
  for (const auto& q : ops.polys) polys.push_back(poly_json(q));
  for (const auto& a : tt.alphas) alphas.push_back(a.to_string());
  for (const auto& b : tt.betas) betas.push_back(b.to_string());
  if (fmt == Format::json) {
    emit(out, {{"moments", p.moments},
               {"depth", p.depth},
               {"polynomials", polys},
               {"alphas", alphas},
               {"betas", betas},
               {"cf_matches_moments", cf.match},
               {"cf_checked_through", cf.checked_through}});
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t k = 0; k < ops.polys.size(); ++k) rows.emplace_back("p_" + std::to_string(k), ops.polys[k].to_string('x'));
    for (std::size_t k = 0; k < tt.alphas.size(); ++k) rows.emplace_back("alpha_" + std::to_string(k), tt.alphas[k].to_string());
    for (std::size_t k = 0; k < tt.betas.size(); ++k) rows.emplace_back("beta_" + std::to_string(k + 1), tt.betas[k].to_string());
    rows.emplace_back("cf_matches_moments", cf.match ? "true" : "false");
    emit_rows(out, rows);
  }
  return cf.match ? kExitOk : kExitCheckFailed;
}

int cmd_relations(const Params& p, Format fmt, std::ostream& out) {
  require_odd(p.points);
  if (p.points > 63) throw UsageError("n must be <= 63");
  if (p.full) {
    const RelationSet rs = relation_set(p.points);
    json gens = json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& g : rs.generators) {
      const json J = delta_indices(g.J);
      gens.push_back({{"J", J}, {"factor", abpoly_json(g.factor)}});
      std::string label = "R^{";
      for (std::size_t i = 0; i < J.size(); ++i) label += (i ? "," : "") + std::to_string(J[i].get<int>());
      label += "}";
      Monomial delta{0, 0, g.J};
      std::string body = g.factor.to_string();
      if (g.J != 0) body = (g.factor == ABPoly::one() ? "" : "(" + body + ") ") + delta.to_string();
      rows.emplace_back(label, body);
    }
    if (fmt == Format::json) emit(out, {{"n", rs.n}, {"count", rs.generators.size()}, {"generators", gens}});
    else emit_rows(out, rows);
    return kExitOk;
  }

  if (p.rel_method != "hankel" && p.rel_method != "recurrence" && p.rel_method != "both") {
    throw UsageError("--method must be hankel|recurrence|both");
  }
  json j{{"n", p.points}, {"method", p.rel_method}};
  std::vector<std::pair<std::string, std::string>> rows{{"n", std::to_string(p.points)}};
  int code = kExitOk;
  if (p.rel_method == "both") {
    const ABPoly h = relation_hankel(p.points);
    const ABPoly r = relation_recurrence(p.points);
    j["relation"] = abpoly_json(r);
    j["hankel"] = abpoly_json(h);
    j["recurrence"] = abpoly_json(r);
    j["methods_agree"] = h == r;
    rows.emplace_back("hankel", h.to_string());
    rows.emplace_back("recurrence", r.to_string());
    rows.emplace_back("methods_agree", h == r ? "true" : "false");
    if (!(h == r)) code = kExitCheckFailed;
  } else {
    const ABPoly r = p.rel_method == "hankel" ? relation_hankel(p.points) : relation_recurrence(p.points);
    j["relation"] = abpoly_json(r);
    rows.emplace_back(p.rel_method, r.to_string());
  }
  if (fmt == Format::json) emit(out, j);
  else emit_rows(out, rows);
  return code;
}

int cmd_hilbert(const Params& p, Format fmt, std::ostream& out) {
  require_odd(p.points);
  if (p.points < 3) throw UsageError("hilbert needs n >= 3");
  if (p.points > 9 && !p.force) throw UsageError("hilbert refuses n > 9 without --force");
  HilbertOptions opts;
  opts.force = p.force;
  const int max_degree = p.max_degree >= 0 ? p.max_degree : hilbert_default_max_degree(p.points);
  const auto dims = hilbert_series_quotient(p.points, max_degree, opts);
  const UniPoly P = poincare_closed(ModuliParams(0, p.points));
  bool match = true;
  json dj = json::array();
  json bj = json::array();
  for (std::size_t d = 0; d < dims.size(); ++d) {
    dj.push_back(dims[d]);
    bj.push_back(P.coeff(d).to_string());
    if (Rational(static_cast<long>(dims[d])) != P.coeff(d)) match = false;
  }
  if (fmt == Format::json) {
    emit(out, {{"n", p.points}, {"max_degree", max_degree}, {"dimensions", dj}, {"betti", bj}, {"matches_betti", match}});
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"degree", "quotient  betti"}};
    for (std::size_t d = 0; d < dims.size(); d += 2) {
      rows.emplace_back(std::to_string(d), std::to_string(dims[d]) + "  " + P.coeff(d).to_string());
    }
    rows.emplace_back("matches_betti", match ? "true" : "false");
    emit_rows(out, rows);
  }
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_volume(const Params& p, Format fmt, std::ostream& out) {
  require_odd(p.points);
  require_nonneg("genus", p.genus);
  if (3 * p.genus + p.points - 3 < 0) throw UsageError("need 3g + n - 3 >= 0");
  const Rational v = symplectic_volume(p.genus, p.points);
  if (fmt == Format::json) emit(out, {{"g", p.genus}, {"n", p.points}, {"volume", v.to_string()}});
  else emit_rows(out, {{"g", std::to_string(p.genus)}, {"n", std::to_string(p.points)}, {"volume", v.to_string()}});
  return kExitOk;
}

int cmd_pairing(const Params& p, Format fmt, std::ostream& out) {
  require_odd(p.points);
  require_nonneg("genus", p.genus);
  require_nonneg("r", p.r);
  require_nonneg("s", p.s);
  const int top = 3 * p.genus + p.points - 3;
  if (p.r + 2 * p.s != top) {
    throw UsageError("need r + 2s = 3g + n - 3 = " + std::to_string(top) + " (got " + std::to_string(p.r + 2 * p.s) + ")");
  }
  if (p.r < p.genus) throw UsageError("need r >= g");
  const Rational v = pairing_ab(p.genus, p.points, p.r, p.s);
  if (fmt == Format::json) {
    emit(out, {{"g", p.genus}, {"n", p.points}, {"r", p.r}, {"s", p.s}, {"pairing", v.to_string()}});
  } else {
    emit_rows(out, {{"g", std::to_string(p.genus)},
                    {"n", std::to_string(p.points)},
                    {"r", std::to_string(p.r)},
                    {"s", std::to_string(p.s)},
                    {"pairing", v.to_string()}});
  }
  return kExitOk;
}

int cmd_verify(const Params& p, Format fmt, std::ostream& out) {
  VerifyOptions opts;
  if (p.scope == "quick") opts.scope = VerifyScope::quick;
  else if (p.scope == "full") opts.scope = VerifyScope::full;
  else throw UsageError("--scope must be quick|full");
  if (p.fault && *p.fault > kVerifyEulerMax) {
    throw UsageError("--inject-euler-fault index must be in [0, " + std::to_string(kVerifyEulerMax) + "]");
  }
  opts.inject_euler_fault = p.fault;
  const VerificationReport rep = verify_suite(opts);
  const auto first = rep.first_failure();
  if (fmt == Format::json) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    }
    emit(out, {{"scope", p.scope},
               {"checks", checks},
               {"overall", rep.overall() ? "pass" : "fail"},
               {"first_failure", first ? json(*first) : json(nullptr)}});
  } else {
    for (const auto& c : rep.checks) out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
    out << "overall: " << (rep.overall() ? "pass" : "fail") << "\n";
    if (first) out << "first failure: " << *first << "\n";
  }
  return rep.overall() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of moduli of rank-2 parabolic bundles with weights 1/4", "parmod"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  Params p;
  auto* euler = app.add_subcommand("euler", "Euler numbers E_0..E_N");
  euler->add_option("--max", p.euler_max, "Largest index N")->default_val(8);

  auto* betti = app.add_subcommand("betti", "Poincare polynomial of R_{g,n}");
  betti->add_option("--genus", p.genus, "Genus g >= 0")->default_val(0);
  betti->add_option("--points", p.points, "Odd number of parabolic points")->required();
  betti->add_option("--method", p.betti_method, "strata|closed|rec-n|rec-g|all")
      ->check(CLI::IsMember({"strata", "closed", "rec-n", "rec-g", "all"}))
      ->default_val("closed");

  auto* ortho = app.add_subcommand("orthopoly", "Monic orthogonal polynomials of a moment sequence");
  ortho->add_option("--moments", p.moments, "Moment sequence (euler)")->default_val("euler");
  ortho->add_option("--depth", p.depth, "Highest degree K")->default_val(4);

  auto* rel = app.add_subcommand("relations", "Genus-0 relation polynomial r_{0,n} or the full relation set");
  rel->add_option("--points", p.points, "Odd number of points")->required();
  rel->add_option("--method", p.rel_method, "hankel|recurrence|both")->default_val("recurrence");
  rel->add_flag("--full", p.full, "Emit every generator R^J");

  auto* hilb = app.add_subcommand("hilbert", "Degreewise dimensions of the presented genus-0 ring");
  hilb->add_option("--points", p.points, "Odd number of points, 3..9")->required();
  hilb->add_option("--max-degree", p.max_degree, "Largest degree (default 2n-4)");
  hilb->add_flag("--force", p.force, "Allow n > 9");

  auto* vol = app.add_subcommand("volume", "Symplectic volume of R_{g,n}");
  vol->add_option("--genus", p.genus, "Genus g >= 0")->default_val(0);
  vol->add_option("--points", p.points, "Odd number of points")->required();

  auto* pair = app.add_subcommand("pairing", "Top pairing <alpha^r beta^s, R_{g,n}>");
  pair->add_option("--genus", p.genus, "Genus g >= 0")->default_val(0);
  pair->add_option("--points", p.points, "Odd number of points")->required();
  pair->add_option("--r", p.r, "alpha exponent")->required();
  pair->add_option("--s", p.s, "beta exponent")->required();

  auto* ver = app.add_subcommand("verify", "Run the cross-validation suite");
  ver->add_option("--scope", p.scope, "quick|full")->default_val("quick");
  ver->add_option("--inject-euler-fault", p.fault, "Test hook: perturb E_INDEX by 1");

  for (auto* sub : {euler, betti, ortho, rel, hilb, vol, pair, ver}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Format fmt = format == "table" ? Format::table : Format::json;
  try {
    if (euler->parsed()) return cmd_euler(p, fmt, out);
    if (betti->parsed()) return cmd_betti(p, fmt, out);
    if (ortho->parsed()) return cmd_orthopoly(p, fmt, out);
    if (rel->parsed()) return cmd_relations(p, fmt, out);
    if (hilb->parsed()) return cmd_hilbert(p, fmt, out);
    if (vol->parsed()) return cmd_volume(p, fmt, out);
    if (pair->parsed()) return cmd_pairing(p, fmt, out);
    if (ver->parsed()) return cmd_verify(p, fmt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace parmod::cli
