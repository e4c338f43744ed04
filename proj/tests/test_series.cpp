#include "doctest.h"
#include "fpg/series.hpp"

using namespace fpg;

namespace {

PowerSeries poly(std::size_t order, std::vector<long> c) {
  IntPoly p;
  for (long v : c) p.emplace_back(v);
  return from_poly(p, order);
}

std::vector<long> first(const PowerSeries& s, std::size_t n) {
  std::vector<long> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(s[k].get_num().get_si());
  return out;
}

// Solve the coupled system for M_1 ... M_{p-1} by simultaneous iteration:
//   M_i = 1 + x T_i + x^3 T_i (M_1 ... M_i - 1),  T_i = M_i ... M_{p-1}.
std::vector<PowerSeries> coupled_middle_system(int p, std::size_t N) {
  std::vector<PowerSeries> m(static_cast<std::size_t>(p - 1), PowerSeries::constant(N, 1));
  PowerSeries one = PowerSeries::constant(N, 1);
  PowerSeries x = PowerSeries::monomial(N, 1);
  PowerSeries x3 = PowerSeries::monomial(N, 3);
  for (std::size_t round = 0; round <= N; ++round) {
    std::vector<PowerSeries> next;
    for (int i = 1; i <= p - 1; ++i) {
      PowerSeries tail = one, head = one;
      for (int j = i; j <= p - 1; ++j) tail = tail * m[static_cast<std::size_t>(j - 1)];
      for (int j = 1; j <= i; ++j) head = head * m[static_cast<std::size_t>(j - 1)];
      next.push_back(one + x * tail + x3 * tail * (head - one));
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const std::size_t N = 8;
  PowerSeries geo = reciprocal(poly(N, {1, -1}));
  for (std::size_t n = 0; n < N; ++n) CHECK(geo[n] == 1);
  CHECK(poly(N, {1, 1}) * poly(N, {1, -1}) == poly(N, {1, 0, -1}));
  CHECK(int_power(poly(N, {1, -1}), 3) == poly(N, {1, -3, 3, -1}));
  CHECK(int_power(poly(N, {1, -1}), -1) == geo);
  CHECK(int_power(poly(N, {2, 5}), 0) == poly(N, {1}));
  CHECK_THROWS_AS(reciprocal(poly(N, {0, 1})), Error);
  CHECK((poly(N, {1, 2}) + poly(5, {1})).order() == 5);
  CHECK((mpq_class(1, 2) * poly(N, {2, 4})) == poly(N, {1, 2}));
  CHECK(reciprocal(poly(N, {2})) [0] == mpq_class(1, 2));
}

TEST_CASE("shift") {
  PowerSeries s = poly(6, {0, 0, 3, 4});
  CHECK(s.shift(-2) == poly(4, {3, 4}));
  CHECK(s.shift(1) == poly(7, {0, 0, 0, 3, 4}));
  CHECK_THROWS_AS(s.shift(-3), Error);
  CHECK_THROWS_AS(poly(2, {0, 0}).shift(-3), Error);
}

TEST_CASE("expand_rational") {
  PowerSeries ones = expand_rational({1}, {1, -1}, 10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(ones[n] == 1);
  CHECK(first(expand_rational({1, 0, -1}, {1, -2, -1, 1}, 6), 6) ==
        std::vector<long>{1, 2, 4, 9, 20, 45});
  CHECK(first(expand_rational({1, 0, 0, 1}, {1, -4, 4, -1}, 4), 4) ==
        std::vector<long>{1, 4, 12, 34});
  CHECK_THROWS_AS(expand_rational({1}, {0, 1}, 5), Error);
  CHECK_THROWS_AS(integer_coeffs(expand_rational({1}, {2}, 3)), Error);
}

TEST_CASE("expand_rational matches the linear recurrence") {
  // c_n = 2c_{n-1} + c_{n-2} - c_{n-3} with numerator 1 - x^2
  PowerSeries s = expand_rational({1, 0, -1}, {1, -2, -1, 1}, 30);
  std::vector<mpz_class> c{1, 2, 4};
  for (std::size_t n = 3; n < 30; ++n) c.push_back(2 * c[n - 1] + c[n - 2] - c[n - 3]);
  CHECK(integer_coeffs(s) == c);
}

TEST_CASE("solve_M") {
  for (int p = 2; p <= 6; ++p) {
    PowerSeries M = solve_M(p, 30);
    CHECK(M.order() == 30);
    CHECK(M[0] == 1);
    CHECK(M[1] == p - 1);
    CHECK(M.has_integer_coeffs());
    CHECK(M.has_nonnegative_coeffs());
  }
  CHECK_THROWS_AS(solve_M(1, 5), Error);
}

TEST_CASE("M_i agree with the coupled middle-subtree system") {
  for (int p = 2; p <= 5; ++p) {
    auto expected = coupled_middle_system(p, 20);
    auto got = solve_all_Mi(p, 20);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  }
}

TEST_CASE("M_i basic properties") {
  CHECK(solve_Mi(2, 1, 20) == solve_M(2, 20));
  for (int p = 2; p <= 4; ++p) {
    PowerSeries prod = PowerSeries::constant(20, 1);
    for (int i = 1; i <= p - 1; ++i) {
      PowerSeries m = solve_Mi(p, i, 20);
      CHECK(m[0] == 1);
      CHECK(m.has_integer_coeffs());
      CHECK(m.has_nonnegative_coeffs());
      prod = prod * m;
    }
    CHECK(prod == solve_M(p, 20));
  }
  CHECK_THROWS_AS(solve_Mi(3, 3, 10), Error);
  CHECK_THROWS_AS(solve_Mi(3, 0, 10), Error);
}

TEST_CASE("p=2 growth series is the known rational function") {
  GrowthSeriesBundle b = positive_growth_series(2, 30);
  CHECK(b.S == expand_rational({1, 0, -1}, {1, -2, -1, 1}, 30));
  CHECK(first(b.S, 6) == std::vector<long>{1, 2, 4, 9, 20, 45});
}

TEST_CASE("growth series bundle") {
  for (int p = 2; p <= 5; ++p) {
    GrowthSeriesBundle b = positive_growth_series(p, 20);
    CHECK(b.M[0] == 1);
    CHECK(b.L[0] == 1);
    CHECK(b.R[0] == 1);
    CHECK(b.S[0] == 1);
    CHECK(b.S[1] == p);
    CHECK(b.S == b.S_product);
    if (p <= 4) {
      CHECK(b.S.has_integer_coeffs());
      CHECK(b.S.has_nonnegative_coeffs());
    }
  }
}

TEST_CASE("all functional equations hold") {
  for (int p = 2; p <= 6; ++p) {
    GrowthSeriesBundle b = positive_growth_series(p, 30);
    auto residuals = series_residuals(b);
    CHECK(residuals.size() == static_cast<std::size_t>(2 * p + 6));
    for (const NamedResidual& r : residuals) {
      INFO("p=" << p << " " << r.name << " " << to_string(r.value));
      CHECK(r.value.order() == 30);
      CHECK(r.value.is_zero());
    }
  }
  CHECK(check_N_equation(5, 20).is_zero());
}

TEST_CASE("a wrong equation leaves a nonzero residual") {
  // The residual checks must be able to fail: perturb M and retest.
  GrowthSeriesBundle b = positive_growth_series(3, 20);
  b.M = b.M + PowerSeries::monomial(20, 7);
  bool any_nonzero = false;
  for (const NamedResidual& r : series_residuals(b)) any_nonzero |= !r.value.is_zero();
  CHECK(any_nonzero);
}

TEST_CASE("growth dominates the middle series and the free submonoid") {
  for (int p = 2; p <= 4; ++p) {
    GrowthSeriesBundle b = positive_growth_series(p, 25);
    mpz_class cumulative_s = 0, cumulative_free = 0, power = 1;
    for (std::size_t n = 0; n < 25; ++n) {
      CHECK(b.S[n] >= b.M[n]);
      cumulative_s += b.S[n].get_num();
      cumulative_free += power;
      power *= p;
      CHECK(cumulative_s >= cumulative_free);
    }
  }
}
