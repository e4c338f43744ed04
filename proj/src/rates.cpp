#include "fpg/rates.hpp"

#include <functional>
#include <optional>
#include <regex>

namespace fpg {

namespace {

void check_p(int p) {
  if (p < 2) throw Error("p must be at least 2, got " + std::to_string(p));
}

mpq_class abs_q(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

// Image of the variable under the map to the growth rate; nullopt where the
// image is infinite.
using RateMap = std::function<std::optional<mpq_class>(const mpq_class&)>;

RateResult bracket_root(int p, const IntPoly& f, mpq_class lo, mpq_class hi,
                        const RateMap& map, const mpq_class& tol,
                        const std::string& equation) {
  if (tol <= 0) throw Error("tolerance must be positive");
  mpq_class flo = poly_eval(f, lo);
  mpq_class fhi = poly_eval(f, hi);
  if (sgn(flo) * sgn(fhi) >= 0) {
    throw Error("no sign change of " + equation + " on [" + lo.get_str() + ", " +
                hi.get_str() + "]");
  }
  for (int iter = 0;; ++iter) {
    auto a = map(lo);
    auto b = map(hi);
    if (a && b && abs_q(*a - *b) <= tol) break;
    if (iter == 4000) throw Error("bisection of " + equation + " did not converge");
    mpq_class mid = (lo + hi) / 2;
    mpq_class fmid = poly_eval(f, mid);
    if (fmid == 0) {
      lo = hi = mid;
      flo = fhi = 0;
      break;
    }
    if (sgn(fmid) == sgn(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  mpq_class a = *map(lo);
  mpq_class b = *map(hi);
  RateResult r;
  r.p = p;
  r.lo = a < b ? a : b;
  r.hi = a < b ? b : a;
  r.equation = equation;
  r.var_lo = lo;
  r.var_hi = hi;
  r.residual_bound = std::max(abs_q(flo), abs_q(fhi));
  return r;
}

// Halve from `hi` until f is positive, giving a lower end for the bracket.
mpq_class positive_point_below(const IntPoly& f, const mpq_class& hi) {
  mpq_class lo = hi / 2;
  for (int n = 0; n < 200; ++n, lo /= 2) {
    if (poly_eval(f, lo) > 0) return lo;
  }
  throw Error("no positive value found below " + hi.get_str());
}

std::optional<mpq_class> reciprocal_map(const mpq_class& v) {
  if (v == 0) return std::nullopt;
  return mpq_class(1 / v);
}

std::optional<mpq_class> identity_map(const mpq_class& v) { return v; }

std::optional<mpq_class> y_to_xi(const mpq_class& y) {
  if (y == 1) return std::nullopt;
  return mpq_class(y / (y - 1));
}

}  // namespace

IntPoly zeta_x_poly(int p) {
  check_p(p);
  return poly_add(poly_mul(poly_pow({1, 0, -1}, p - 1), {1, 1, -1}), {-1});
}

IntPoly zeta_y_poly(int p) {
  check_p(p);
  IntPoly y2p(static_cast<std::size_t>(2 * p + 1));
  y2p.back() = -1;
  return poly_add(poly_mul(poly_pow({-1, 0, 1}, p - 1), {-1, 1, 1}), y2p);
}

IntPoly xi_t_poly(int p) {
  check_p(p);
  return poly_add(poly_add(poly_pow({1, -1}, p), poly_pow({1, -1}, p - 1)), {-1});
}

IntPoly xi_y_poly(int p) {
  check_p(p);
  IntPoly f(static_cast<std::size_t>(p + 1));
  f.back() = 1;
  return poly_add(f, {-1, -1});
}

IntPoly xi_direct_poly(int p) {
  check_p(p);
  IntPoly xp(static_cast<std::size_t>(p + 1));
  xp.back() = -1;
  return poly_add(poly_mul({-1, 2}, poly_pow({-1, 1}, p - 1)), xp);
}

RateResult zeta(int p, const mpq_class& tol) {
  IntPoly f = zeta_x_poly(p);
  mpq_class hi(1, p);
  return bracket_root(p, f, positive_point_below(f, hi), hi, reciprocal_map, tol,
                      "(1-x^2)^(p-1)(1+x-x^2)=1");
}

RateResult zeta_y(int p, const mpq_class& tol) {
  return bracket_root(p, zeta_y_poly(p), p, 2 * p, identity_map, tol,
                      "(y^2-1)^(p-1)(y^2+y-1)=y^(2p)");
}

RateResult xi(int p, const mpq_class& tol) {
  IntPoly f = xi_t_poly(p);
  mpq_class hi(1, 2);
  return bracket_root(p, f, positive_point_below(f, hi), hi, reciprocal_map, tol,
                      "(1-t)^p+(1-t)^(p-1)=1");
}

RateResult xi_y(int p, const mpq_class& tol) {
  return bracket_root(p, xi_y_poly(p), 1, 2, y_to_xi, tol, "y^p=y+1");
}

RateResult xi_direct(int p, const mpq_class& tol) {
  return bracket_root(p, xi_direct_poly(p), 2, 2 * p, identity_map, tol,
                      "(2xi-1)(xi-1)^(p-1)=xi^p");
}

bool zeta_y_form_brackets(const RateResult& r) {
  IntPoly g = zeta_y_poly(r.p);
  return sgn(poly_eval(g, r.lo)) * sgn(poly_eval(g, r.hi)) <= 0;
}

Approximation ln2(const mpq_class& error) {
  // 2 atanh(1/3) = sum_k 2 / ((2k+1) 3^{2k+1}); the tail after term K-1 is
  // at most 9/8 times the first omitted term.
  mpq_class sum = 0;
  mpz_class power = 3;  // 3^{2k+1}
  for (long k = 0;; ++k) {
    mpq_class term(2, power * (2 * k + 1));
    term.canonicalize();
    mpq_class tail = term * mpq_class(9, 8);
    if (tail < error) return {sum, tail};
    sum += term;
    power *= 9;
  }
}

Approximation xi_asymptotic(int p) {
  check_p(p);
  Approximation l = ln2(mpq_class(1, mpz_class("10000000000000000000000000000000000000000")));
  mpq_class a = mpq_class(2 * p - 1, 2);
  mpq_class value = a / l.value + mpq_class(1, 2);
  // |a/L - a/l| <= a e / (l (l - e)) for |L - l| <= e.
  mpq_class bound = a * l.error_bound / (l.value * (l.value - l.error_bound));
  return {value, bound};
}

RateReport rate_report(int p_max, const mpq_class& tol) {
  check_p(p_max);
  RateReport report;
  for (int p = 2; p <= p_max; ++p) {
    RateRow row;
    row.p = p;
    row.zeta = zeta(p, tol);
    row.xi = xi(p, tol);
    row.lambda_lo = row.zeta.lo - p;
    row.lambda_hi = row.zeta.hi - p;
    row.xi_ratio = row.xi.midpoint() / (2 * p - 1);
    row.asymptotic_gap = abs_q(row.xi.midpoint() - xi_asymptotic(p).value);
    row.zeta_bounds_violated = !(row.zeta.lo > p && row.zeta.hi < mpq_class(2 * p + 1, 2));
    if (!report.rows.empty()) {
      const RateRow& prev = report.rows.back();
      if ((row.lambda_lo + row.lambda_hi) < (prev.lambda_lo + prev.lambda_hi)) {
        report.lambda_nondecreasing = false;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

mpq_class parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    mpz_class den(m[2].str(), 10);
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(m[1].str(), 10), den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits, 10);
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      if (m[4].length() > 5) throw Error("exponent out of range in '" + text + "'");
      exponent += std::stol(m[4].str());
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    return m[1].str() == "-" ? mpq_class(-q) : q;
  }
  throw Error("not a rational number: '" + text + "'");
}

std::string to_decimal(const mpq_class& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = abs_q(q).get_num() * scale / abs_q(q).get_den();
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string out = (q < 0 && scaled != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace fpg
