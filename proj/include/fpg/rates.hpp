#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "fpg/series.hpp"

namespace fpg {

/// Certified enclosure lo <= rate <= hi of a growth rate. The defining
/// polynomial f changes sign between var_lo and var_hi, the bracket in its
/// own variable; residual_bound = max |f| at those two points.
struct RateResult {
  int p = 0;
  mpq_class lo, hi;
  std::string equation;
  mpq_class var_lo, var_hi;
  mpq_class residual_bound;

  mpq_class width() const { return hi - lo; }
  mpq_class midpoint() const { return (lo + hi) / 2; }
};

inline const mpq_class kDefaultTolerance{1, 1000000000};

/// Growth rate of the positive monoid: 1/x for the root x in (0, 1/p] of
/// (1-x^2)^{p-1} (1+x-x^2) = 1.
RateResult zeta(int p, const mpq_class& tol = kDefaultTolerance);
/// Same rate from (y^2-1)^{p-1} (y^2+y-1) = y^{2p}, bisected on [p, 2p].
RateResult zeta_y(int p, const mpq_class& tol = kDefaultTolerance);

/// Lower bound for the group growth rate: 1/t for the root t in (0, 1/2]
/// of (1-t)^p + (1-t)^{p-1} = 1.
RateResult xi(int p, const mpq_class& tol = kDefaultTolerance);
/// Same rate as y/(y-1) for the root y in [1, 2] of y^p = y + 1.
RateResult xi_y(int p, const mpq_class& tol = kDefaultTolerance);
/// Same rate from (2 xi - 1)(xi - 1)^{p-1} = xi^p on [2, 2p].
RateResult xi_direct(int p, const mpq_class& tol = kDefaultTolerance);

/// True iff the y-form polynomial for zeta changes sign on [r.lo, r.hi].
bool zeta_y_form_brackets(const RateResult& r);

IntPoly zeta_x_poly(int p);
IntPoly zeta_y_poly(int p);
IntPoly xi_t_poly(int p);
IntPoly xi_y_poly(int p);
IntPoly xi_direct_poly(int p);

struct Approximation {
  mpq_class value;
  mpq_class error_bound;
};

/// ln 2 = 2 atanh(1/3), summed until the tail is below `error`.
Approximation ln2(const mpq_class& error);

/// (p - 1/2) / ln 2 + 1/2.
Approximation xi_asymptotic(int p);

struct RateRow {
  int p = 0;
  RateResult zeta, xi;
  mpq_class lambda_lo, lambda_hi;  // zeta - p
  mpq_class xi_ratio;              // xi / (2p - 1), midpoint
  mpq_class asymptotic_gap;        // |xi - xi_asymptotic|, midpoint
  bool zeta_bounds_violated = false;
};

struct RateReport {
  std::vector<RateRow> rows;
  bool lambda_nondecreasing = true;  // observation only
};

RateReport rate_report(int p_max, const mpq_class& tol = kDefaultTolerance);

/// Accepts "num/den", integers and decimals with an optional exponent.
mpq_class parse_rational(const std::string& text);

/// Decimal rendering with `digits` digits after the point, rounded toward zero.
std::string to_decimal(const mpq_class& q, int digits);

}  // namespace fpg
