#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "parmod/cli.hpp"

using nlohmann::json;
using parmod::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("euler subcommand") {
  const json j = invoke_json({"euler", "--max", "8"});
  CHECK(j == json::array({"1", "0", "-1", "0", "5", "0", "-61", "0", "1385"}));
  const json big = invoke_json({"euler", "--max", "24"});
  CHECK(big[24] == "15514534163557086905");
}

TEST_CASE("betti subcommand") {
  const json j = invoke_json({"betti", "--genus", "0", "--points", "5"});
  CHECK(j["coefficients"] == json::array({"1", "0", "6", "0", "1"}));
  CHECK(j["g"] == 0);
  CHECK(j["n"] == 5);
  const json all = invoke_json({"betti", "--genus", "1", "--points", "3", "--method", "all"});
  CHECK(all["methods_agree"] == true);
  CHECK(all["methods"].size() == 4);
  CHECK(all["methods"]["strata"] == all["coefficients"]);
  CHECK(all["coefficients"] == json::array({"1", "0", "4", "2", "4", "0", "1"}));
}

TEST_CASE("usage errors exit 2") {
  auto r = invoke({"betti", "--points", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be odd") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(invoke({"betti", "--points", "1"}).code == 2);
  CHECK(invoke({"betti", "--points", "3", "--method", "bogus"}).code == 2);
  CHECK(invoke({"nosuch"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"pairing", "--points", "5", "--r", "1", "--s", "0"}).code == 2);
  CHECK(invoke({"hilbert", "--points", "11"}).code == 2);
  CHECK(invoke({"verify", "--inject-euler-fault", "99"}).code == 2);
  CHECK(invoke({"--format", "xml", "euler"}).code == 2);
}

TEST_CASE("orthopoly subcommand") {
  const json j = invoke_json({"orthopoly", "--moments", "euler", "--depth", "3"});
  CHECK(j["polynomials"][3] == json::array({"0", "-5", "0", "1"}));
  CHECK(j["betas"] == json::array({"1", "4"}));
  CHECK(j["alphas"] == json::array({"0", "0", "0"}));
  CHECK(j["cf_matches_moments"] == true);
}

TEST_CASE("relations subcommand") {
  const json j = invoke_json({"relations", "--points", "9", "--method", "both"});
  CHECK(j["methods_agree"] == true);
  CHECK(j["relation"]["polynomial"] == "alpha^4 - 14 alpha^2 beta + 9 beta^2");
  const json full = invoke_json({"relations", "--points", "5", "--full"});
  CHECK(full["count"] == 16);
  CHECK(full["generators"][0]["J"].empty());
  CHECK(full["generators"][0]["factor"]["polynomial"] == "alpha^2 - beta");
  CHECK(full["generators"][15]["J"].size() == 2);
}

TEST_CASE("hilbert, volume and pairing subcommands") {
  const json h = invoke_json({"hilbert", "--points", "7"});
  CHECK(h["matches_betti"] == true);
  CHECK(h["dimensions"] == json::array({1, 0, 8, 0, 30, 0, 8, 0, 1, 0, 0}));
  CHECK(invoke_json({"volume", "--genus", "1", "--points", "1"})["volume"] == "1/2");
  CHECK(invoke_json({"volume", "--points", "5"})["volume"] == "1/2");
  CHECK(invoke_json({"pairing", "--genus", "1", "--points", "3", "--r", "3", "--s", "0"})["pairing"] == "3");
}

TEST_CASE("output is deterministic and round-trips") {
  const std::vector<std::string> args{"betti", "--genus", "2", "--points", "7", "--method", "all"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).dump(2) + "\n" == a.out);
}

TEST_CASE("table format") {
  const auto r = invoke({"--format", "table", "betti", "--points", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[1, 0, 6, 0, 1]") != std::string::npos);
  const auto r2 = invoke({"betti", "--points", "5", "--format", "table"});
  CHECK(r2.out == r.out);
}

TEST_CASE("verify subcommand and the fault hook") {
  const json ok = invoke_json({"verify", "--scope", "quick"});
  CHECK(ok["overall"] == "pass");
  CHECK(ok["first_failure"].is_null());
  CHECK(ok["checks"].size() == 20);

  const auto bad = invoke({"verify", "--scope", "quick", "--inject-euler-fault", "4"});
  CHECK(bad.code == 1);
  const json jb = json::parse(bad.out);
  CHECK(jb["overall"] == "fail");
  CHECK(jb["first_failure"] == "05 euler listing E0..E8");
}
