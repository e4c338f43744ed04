#include "fpg/cli.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpg/automaton.hpp"
#include "fpg/fordham.hpp"
#include "fpg/normal_forms.hpp"
#include "fpg/oracle.hpp"
#include "fpg/rates.hpp"
#include "fpg/series.hpp"

namespace fpg::cli {

namespace {

using nlohmann::json;

struct Options {
  int p = 2;
  int n = 10;
  int pmax = 10;
  std::string method;
  std::string tol = "1e-9";
  std::string form = "inf";
  std::string profile = "small";
  std::string format = "json";
  bool as_float = false;
  bool trace = false;
  std::string word;
  std::string other;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json header(const char* command, const Options& o) {
  return json{{"schema", "1"}, {"command", command}, {"p", o.p}};
}

// Integers that fit in 64 bits are JSON numbers, larger ones strings.
json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// Decimal places for --float: two beyond the tolerance.
int float_digits(const mpq_class& tol) {
  int d = 0;
  mpq_class step = 1;
  while (step > tol && d < 60) {
    step /= 10;
    ++d;
  }
  return d + 2;
}

json rational(const mpq_class& q, const Options& o, const mpq_class& tol) {
  if (o.as_float) return std::stod(to_decimal(q, float_digits(tol)));
  return q.get_str();
}

mpq_class tolerance(const Options& o) {
  mpq_class tol;
  try {
    tol = parse_rational(o.tol);
  } catch (const Error& e) {
    throw UsageError(std::string("--tol: ") + e.what());
  }
  if (tol <= 0) throw UsageError("--tol must be positive");
  return tol;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::string counts_csv(const char* column, const std::vector<mpz_class>& counts) {
  std::ostringstream out;
  out << "n," << column << "\n";
  for (std::size_t k = 0; k < counts.size(); ++k) out << k << ',' << counts[k].get_str() << "\n";
  return out.str();
}

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("--format csv is only available for growth and rate report");
}

std::string growth_positive(const Options& o) {
  std::string method = o.method.empty() ? "series" : o.method;
  std::vector<mpz_class> coeffs;
  const auto n = static_cast<std::size_t>(o.n);
  if (method == "series") {
    if (n > 0) coeffs = integer_coeffs(positive_growth_series(o.p, n).S);
  } else if (method == "brute") {
    if (n > 0) {
      for (auto c : enumerate_positive_by_weight(o.p, o.n - 1).counts) {
        coeffs.emplace_back(static_cast<unsigned long>(c));
      }
    }
  } else {
    throw UsageError("growth positive supports --method series|brute");
  }
  if (o.format == "csv") return counts_csv("coefficient", coeffs);
  json j = header("growth positive", o);
  j["n"] = o.n;
  j["method"] = method;
  j["coefficients"] = json::array();
  for (const auto& c : coeffs) j["coefficients"].push_back(integer(c));
  return render(j);
}

std::string growth_language(const Options& o) {
  std::string method = o.method.empty() ? "automaton" : o.method;
  std::vector<mpz_class> counts;
  const auto n = static_cast<std::size_t>(o.n);
  if (method == "automaton") {
    for (std::size_t k = 0; k < n; ++k) counts.push_back(count_paths(o.p, k));
  } else if (method == "closed-form") {
    if (n > 0) counts = integer_coeffs(phi_series(o.p, n));
  } else if (method == "brute") {
    for (std::size_t k = 0; k < n; ++k) counts.push_back(count_language_bruteforce(o.p, k));
  } else {
    throw UsageError("growth language supports --method automaton|closed-form|brute");
  }
  if (o.format == "csv") return counts_csv("count", counts);
  json j = header("growth language", o);
  j["n"] = o.n;
  j["method"] = method;
  j["counts"] = json::array();
  for (const auto& c : counts) j["counts"].push_back(integer(c));
  return render(j);
}

json rate_row(const RateResult& r, const Options& o, const mpq_class& tol) {
  return json{{"p", r.p},
              {"value_lo", rational(r.lo, o, tol)},
              {"value_hi", rational(r.hi, o, tol)},
              {"value", rational(r.midpoint(), o, tol)},
              {"equation", r.equation}};
}

std::string rate_single(const Options& o, bool lower_bound) {
  require_json(o);
  mpq_class tol = tolerance(o);
  RateResult r = lower_bound ? xi(o.p, tol) : zeta(o.p, tol);
  json j = header(lower_bound ? "rate lower-bound" : "rate positive", o);
  j["tol"] = tol.get_str();
  j["rows"] = json::array({rate_row(r, o, tol)});
  j["value"] = rational(r.midpoint(), o, tol);
  return render(j);
}

std::string rate_report_cmd(const Options& o) {
  mpq_class tol = tolerance(o);
  RateReport report = rate_report(o.pmax, tol);
  if (o.format == "csv") {
    const int digits = float_digits(tol);
    std::ostringstream out;
    out << "p,zeta_lo,zeta_hi,xi_lo,xi_hi,lambda_lo,lambda_hi,xi_ratio,asymptotic_gap\n";
    for (const RateRow& row : report.rows) {
      out << row.p;
      for (const mpq_class* q : {&row.zeta.lo, &row.zeta.hi, &row.xi.lo, &row.xi.hi,
                                 &row.lambda_lo, &row.lambda_hi, &row.xi_ratio, &row.asymptotic_gap}) {
        out << ',' << (o.as_float ? to_decimal(*q, digits) : q->get_str());
      }
      out << "\n";
    }
    return out.str();
  }
  json j{{"schema", "1"}, {"command", "rate report"}, {"pmax", o.pmax}, {"tol", tol.get_str()}};
  j["lambda_nondecreasing"] = report.lambda_nondecreasing;
  j["rows"] = json::array();
  for (const RateRow& row : report.rows) {
    j["rows"].push_back({{"p", row.p},
                         {"zeta", rate_row(row.zeta, o, tol)},
                         {"xi", rate_row(row.xi, o, tol)},
                         {"lambda_lo", rational(row.lambda_lo, o, tol)},
                         {"lambda_hi", rational(row.lambda_hi, o, tol)},
                         {"xi_ratio", rational(row.xi_ratio, o, tol)},
                         {"asymptotic_gap", rational(row.asymptotic_gap, o, tol)},
                         {"zeta_bounds_violated", row.zeta_bounds_violated}});
  }
  return render(j);
}

std::string normalize_cmd(const Options& o) {
  require_json(o);
  Word w = parse_word(o.word);
  RewriteRun run = rewrite_leftmost(o.p, w, o.trace);
  Word result = o.form == "fin" ? bar(o.p, run.result) : run.result;
  json j = header("normalize", o);
  j["form"] = o.form;
  j["input"] = format_word(w);
  j["normal_form"] = format_word(result);
  j["steps"] = run.steps;
  if (o.trace) {
    j["trace"] = json::array();
    for (const RewriteStep& s : run.trace) {
      j["trace"].push_back({{"rule", rule_name(s.rule)},
                            {"position", s.position},
                            {"before", format_word(s.before)},
                            {"after", format_word(s.after)}});
    }
    if (o.form == "fin") {
      j["trace"].push_back({{"rule", "bar"},
                            {"before", format_word(run.result)},
                            {"after", format_word(result)}});
    }
  }
  return render(j);
}

std::string length_cmd(const Options& o) {
  require_json(o);
  TreePair d = reduce(evaluate(o.p, parse_word(o.word)));
  const WeightTable table;
  int length = positive_length(d, table);
  ClassifiedTree c = classify(o.p, d.source);
  json j = header("length", o);
  j["word"] = format_word(parse_word(o.word));
  j["element"] = to_string(d);
  j["length"] = length;
  j["carets"] = json::array();
  for (std::size_t id = 0; id < c.classes.size(); ++id) {
    j["carets"].push_back({{"caret", id},
                           {"class", class_name(c.classes[id])},
                           {"weight", table(c.classes[id].kind)}});
  }
  j["order"] = c.order;
  return render(j);
}

std::string equal_cmd(const Options& o) {
  require_json(o);
  TreePair a = reduce(evaluate(o.p, parse_word(o.word)));
  TreePair b = reduce(evaluate(o.p, parse_word(o.other)));
  json j = header("equal", o);
  j["left"] = to_string(a);
  j["right"] = to_string(b);
  j["equal"] = a == b;
  return render(j);
}

std::string eval_cmd(const Options& o) {
  require_json(o);
  Word w = parse_word(o.word);
  TreePair d = reduce(evaluate(o.p, w));
  json j = header("eval", o);
  j["word"] = format_word(w);
  j["element"] = to_string(d);
  j["carets"] = d.source.caret_count();
  j["positive"] = is_positive(d);
  return render(j);
}

struct Verified {
  std::string payload;
  bool passed;
  std::string summary;
};

Verified verify_cmd(const Options& o) {
  require_json(o);
  VerifyReport r = verify_suite(o.p, o.profile == "full" ? Profile::Full : Profile::Small);
  json j = header("verify", o);
  j["profile"] = o.profile;
  j["checks"] = json::array();
  std::ostringstream summary;
  for (const CheckResult& c : r.checks) {
    j["checks"].push_back({{"check_name", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"details", c.details}});
    summary << (c.passed ? "pass " : "FAIL ") << c.name << " (" << c.seconds << " s)\n";
  }
  j["all_passed"] = r.all_passed();
  return {render(j), r.all_passed(), summary.str()};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Growth of the generalized Thompson groups F(p)", "fpg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Group parameter p >= 2")->required()->check(CLI::Range(2, INT_MAX));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Bracket width, rational or decimal (default 1e-9)");
    sub->add_flag("--float", o.as_float, "Render rationals as decimals");
  };

  auto* growth = app.add_subcommand("growth", "Growth series coefficients");
  growth->require_subcommand(1);
  auto* g_pos = growth->add_subcommand("positive", "Positive monoid growth, by word length");
  auto* g_lang = growth->add_subcommand("language", "Words of the regular language L_p, by length");
  for (auto* sub : {g_pos, g_lang}) {
    add_p(sub);
    sub->add_option("--n", o.n, "Number of coefficients")->check(CLI::Range(0, INT_MAX));
    sub->add_option("--method", o.method)
        ->check(CLI::IsMember({"series", "brute", "automaton", "closed-form"}));
    add_format(sub);
  }

  auto* rate = app.add_subcommand("rate", "Growth rates");
  rate->require_subcommand(1);
  auto* r_pos = rate->add_subcommand("positive", "Growth rate of the positive monoid");
  auto* r_low = rate->add_subcommand("lower-bound", "Lower bound for the group growth rate");
  auto* r_rep = rate->add_subcommand("report", "Both rates for p = 2..pmax");
  for (auto* sub : {r_pos, r_low}) {
    add_p(sub);
    add_tol(sub);
    add_format(sub);
  }
  r_rep->add_option("--pmax", o.pmax, "Largest p")->required()->check(CLI::Range(2, INT_MAX));
  add_tol(r_rep);
  add_format(r_rep);

  auto* normalize = app.add_subcommand("normalize", "Normal form of a word");
  add_p(normalize);
  normalize->add_option("--form", o.form, "inf or fin")->check(CLI::IsMember({"inf", "fin"}));
  normalize->add_flag("--trace", o.trace, "Include the rewriting steps");
  normalize->add_option("word", o.word, "Word, e.g. \"x1 x0^-1\"")->required();
  add_format(normalize);

  auto* length = app.add_subcommand("length", "Word length of a positive element");
  add_p(length);
  length->add_option("word", o.word)->required();
  add_format(length);

  auto* eq = app.add_subcommand("equal", "Whether two words define the same element");
  add_p(eq);
  eq->add_option("left", o.word)->required();
  eq->add_option("right", o.other)->required();
  add_format(eq);

  auto* eval = app.add_subcommand("eval", "Reduced tree pair of a word");
  add_p(eval);
  eval->add_option("word", o.word)->required();
  add_format(eval);

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  add_p(verify);
  verify->add_option("--profile", o.profile, "small or full")->check(CLI::IsMember({"small", "full"}));
  add_format(verify);

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    const CLI::App* failing = &app;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      failing = sub;
    }
    result.err = std::string(e.what()) + "\n" + failing->help();
    return result;
  }

  try {
    if (g_pos->parsed()) {
      result.out = growth_positive(o);
    } else if (g_lang->parsed()) {
      result.out = growth_language(o);
    } else if (r_pos->parsed() || r_low->parsed()) {
      result.out = rate_single(o, r_low->parsed());
    } else if (r_rep->parsed()) {
      result.out = rate_report_cmd(o);
    } else if (normalize->parsed()) {
      result.out = normalize_cmd(o);
    } else if (length->parsed()) {
      result.out = length_cmd(o);
    } else if (eq->parsed()) {
      result.out = equal_cmd(o);
    } else if (eval->parsed()) {
      result.out = eval_cmd(o);
    } else if (verify->parsed()) {
      Verified v = verify_cmd(o);
      result.out = v.payload;
      result.err = v.summary;
      result.exit_code = v.passed ? 0 : 1;
    }
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace fpg::cli
