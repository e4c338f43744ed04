#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fpg/words.hpp"

namespace fpg {

/// Truncated power series sum_{n < order} c_n x^n with exact rational
/// coefficients. Binary operations return the smaller of the two orders.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order = 0);
  PowerSeries(std::size_t order, std::vector<mpq_class> coeffs);

  static PowerSeries constant(std::size_t order, const mpq_class& c);
  static PowerSeries monomial(std::size_t order, std::size_t degree,
                              const mpq_class& c = 1);

  std::size_t order() const noexcept { return c_.size(); }
  const mpq_class& operator[](std::size_t n) const { return c_.at(n); }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  bool has_integer_coeffs() const;
  bool has_nonnegative_coeffs() const;

  PowerSeries truncate(std::size_t order) const;

  /// Multiplication by x^k. For k < 0 the low coefficients must vanish; the
  /// result then has order() + k, since the top coefficients are unknown.
  PowerSeries shift(long k) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const mpq_class& s, const PowerSeries& a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<mpq_class> c_;
};

PowerSeries reciprocal(const PowerSeries& a);
/// a^e; a negative exponent inverts first.
PowerSeries int_power(const PowerSeries& a, long e);

std::string to_string(const PowerSeries& a);

/// Coefficient list, constant term first.
using IntPoly = std::vector<mpz_class>;

IntPoly poly_add(IntPoly a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int e);
mpq_class poly_eval(const IntPoly& a, const mpq_class& x);

PowerSeries from_poly(const IntPoly& poly, std::size_t order);
PowerSeries expand_rational(const IntPoly& numerator, const IntPoly& denominator,
                            std::size_t order);

/// Coefficients as integers; throws if any is not integral.
std::vector<mpz_class> integer_coeffs(const PowerSeries& a);

/// M = M_1 ... M_{p-1}, the solution of x^2 M = (1 - x^3 M)^{-(p-1)} + x^2 - 1.
PowerSeries solve_M(int p, std::size_t order);

/// M_1 ... M_{p-1} from the closed-form products
///   M_1 ... M_i = x^-2 (1 - x^3 M)^-i + 1 - x^-2.
std::vector<PowerSeries> solve_all_Mi(int p, std::size_t order);
PowerSeries solve_Mi(int p, int i, std::size_t order);

struct GrowthSeriesBundle {
  int p = 0;
  std::size_t order = 0;
  std::vector<PowerSeries> Mi;  // Mi[i - 1] is M_i
  PowerSeries M, L, R, S;
  PowerSeries S_product;  // L M_1 ... M_{p-2} R

  const PowerSeries& M_(int i) const { return Mi.at(static_cast<std::size_t>(i - 1)); }
};

GrowthSeriesBundle positive_growth_series(int p, std::size_t order = 30);

/// x N^p + (x^3 - x - 1) N + 1 with N = 1 / (1 - x^3 M).
PowerSeries check_N_equation(int p, std::size_t order);

struct NamedResidual {
  std::string name;
  PowerSeries value;
};

/// Every functional equation of the bundle, written as lhs - rhs.
std::vector<NamedResidual> series_residuals(const GrowthSeriesBundle& b);

}  // namespace fpg
