#include <cmath>

#include <json.hpp>

#include "doctest.h"
#include "fpg/automaton.hpp"
#include "fpg/cli.hpp"
#include "fpg/normal_forms.hpp"
#include "fpg/series.hpp"

using fpg::cli::CommandResult;
using fpg::cli::run;
using nlohmann::json;

namespace {

json payload(const CommandResult& r) {
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("growth positive") {
  json j = payload(run({"growth", "positive", "--p", "2", "--n", "6", "--method", "series"}));
  CHECK(j["schema"] == "1");
  CHECK(j["coefficients"] == json::array({1, 2, 4, 9, 20, 45}));

  json s = payload(run({"growth", "positive", "--p", "3", "--n", "7", "--method", "series"}));
  json b = payload(run({"growth", "positive", "--p", "3", "--n", "7", "--method", "brute"}));
  CHECK(s["coefficients"] == b["coefficients"]);

  CommandResult csv = run({"growth", "positive", "--p", "2", "--n", "4", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "n,coefficient\n0,1\n1,2\n2,4\n3,9\n");

  json empty = payload(run({"growth", "positive", "--p", "2", "--n", "0"}));
  CHECK(empty["coefficients"].empty());
}

TEST_CASE("large coefficients are strings") {
  json j = payload(run({"growth", "positive", "--p", "5", "--n", "40"}));
  auto coeffs = fpg::integer_coeffs(fpg::positive_growth_series(5, 40).S);
  const json& last = j["coefficients"].back();
  REQUIRE(!coeffs.back().fits_slong_p());
  CHECK(last == coeffs.back().get_str());
  CHECK(j["coefficients"][1] == 5);
}

TEST_CASE("growth language methods agree") {
  json a = payload(run({"growth", "language", "--p", "3", "--n", "6", "--method", "automaton"}));
  json c = payload(run({"growth", "language", "--p", "3", "--n", "6", "--method", "closed-form"}));
  json b = payload(run({"growth", "language", "--p", "3", "--n", "6", "--method", "brute"}));
  CHECK(a["counts"] == c["counts"]);
  CHECK(a["counts"] == b["counts"]);
  CHECK(a["counts"][3] == fpg::count_paths(3, 3).get_si());
  CHECK(b["method"] == "brute");
}

TEST_CASE("rates") {
  json j = payload(run({"rate", "lower-bound", "--p", "3", "--tol", "1e-6", "--float"}));
  CHECK(std::abs(j["value"].get<double>() - 4.079595623) < 1e-6);
  CHECK(j["rows"][0]["p"] == 3);

  json exact = payload(run({"rate", "positive", "--p", "2"}));
  const json& row = exact["rows"][0];
  mpq_class lo(row["value_lo"].get<std::string>()), hi(row["value_hi"].get<std::string>());
  CHECK(lo > mpq_class(224, 100));
  CHECK(hi < mpq_class(225, 100));
  CHECK(hi - lo <= mpq_class(1, 1000000000));

  json report = payload(run({"rate", "report", "--pmax", "4"}));
  CHECK(report["rows"].size() == 3);
  CommandResult csv = run({"rate", "report", "--pmax", "3", "--format", "csv", "--float"});
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("p,zeta_lo", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
}

TEST_CASE("normalize") {
  json fin = payload(run({"normalize", "--p", "2", "--form", "fin", "x1 x0 x0^-1"}));
  CHECK(fin["normal_form"] == "x1");
  CHECK(fin.find("trace") == fin.end());

  const char* word = "x3 x0^-1 x2 x1";
  json inf = payload(run({"normalize", "--p", "2", word, "--trace"}));
  CHECK(inf["normal_form"] == fpg::format_word(fpg::to_infinite_nf(2, fpg::parse_word(word))));
  CHECK(inf["trace"].size() == inf["steps"].get<std::size_t>());
  CHECK(inf["trace"].back()["after"] == inf["normal_form"]);

  json fin2 = payload(run({"normalize", "--p", "2", "--form", "fin", word}));
  CHECK(fin2["normal_form"] == fpg::format_word(fpg::finite_nf(2, fpg::parse_word(word))));
}

TEST_CASE("length, equal, eval") {
  json l = payload(run({"length", "--p", "2", "x0 x1"}));
  CHECK(l["length"] == 2);
  int total = 0;
  for (const json& c : l["carets"]) total += c["weight"].get<int>();
  CHECK(total == 2);

  json e = payload(run({"equal", "--p", "2", "x1 x0", "x0 x2"}));
  CHECK(e["equal"] == true);
  json ne = payload(run({"equal", "--p", "2", "x1 x0", "x0 x1"}));
  CHECK(ne["equal"] == false);

  json v = payload(run({"eval", "--p", "2", "x0 x0^-1"}));
  CHECK(v["carets"] == 0);
  CHECK(v["positive"] == true);
}

TEST_CASE("verify") {
  CommandResult r = run({"verify", "--p", "2", "--profile", "small"});
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() > 10);
  for (const json& c : j["checks"]) CHECK(c["status"] == "pass");
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"growth"}).exit_code == 2);
  CHECK(run({"growth", "positive", "--p", "1"}).exit_code == 2);
  CHECK(run({"growth", "positive", "--n", "3"}).exit_code == 2);
  CHECK(run({"growth", "positive", "--p", "2", "--method", "automaton"}).exit_code == 2);
  CHECK(run({"growth", "positive", "--p", "2", "--frobnicate"}).exit_code == 2);
  CHECK(run({"rate", "positive", "--p", "2", "--tol", "abc"}).exit_code == 2);
  CHECK(run({"rate", "positive", "--p", "2", "--tol", "0"}).exit_code == 2);
  CHECK(run({"normalize", "--p", "2", "x0", "--format", "csv"}).exit_code == 2);

  CommandResult neg = run({"length", "--p", "2", "x0^-1"});
  CHECK(neg.exit_code == 1);
  CHECK(neg.err.find("not positive") != std::string::npos);
  CHECK(run({"eval", "--p", "2", "y7"}).exit_code == 1);
  CHECK(run({"growth", "language", "--p", "6", "--n", "12", "--method", "brute"}).exit_code == 1);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"rate", "report", "--pmax", "5"},
        std::vector<std::string>{"normalize", "--p", "3", "--trace", "x5 x1^-1 x2"},
        std::vector<std::string>{"verify", "--p", "3"}}) {
    CommandResult a = run(args), b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
