#include "fpg/series.hpp"

#include <algorithm>

namespace fpg {

PowerSeries::PowerSeries(std::size_t order) : c_(order) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<mpq_class> coeffs)
    : c_(std::move(coeffs)) {
  c_.resize(order);
}

PowerSeries PowerSeries::constant(std::size_t order, const mpq_class& c) {
  PowerSeries s(order);
  if (order > 0) s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t degree,
                                  const mpq_class& c) {
  PowerSeries s(order);
  if (degree < order) s.c_[degree] = c;
  return s;
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool PowerSeries::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpq_class& q) { return q.get_den() == 1; });
}

bool PowerSeries::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q >= 0; });
}

PowerSeries PowerSeries::truncate(std::size_t order) const {
  if (order > c_.size()) throw Error("cannot raise the order of a truncated series");
  return PowerSeries(order, std::vector<mpq_class>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order)));
}

PowerSeries PowerSeries::shift(long k) const {
  if (k >= 0) {
    std::vector<mpq_class> out(static_cast<std::size_t>(k));
    out.insert(out.end(), c_.begin(), c_.end());
    std::size_t order = out.size();
    return PowerSeries(order, std::move(out));
  }
  auto drop = static_cast<std::size_t>(-k);
  if (drop > c_.size()) throw Error("shift below the order of the series");
  for (std::size_t n = 0; n < drop; ++n) {
    if (c_[n] != 0) {
      throw Error("cannot divide by x^" + std::to_string(drop) +
                  ": coefficient of x^" + std::to_string(n) + " is nonzero");
    }
  }
  return PowerSeries(c_.size() - drop,
                     std::vector<mpq_class>(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end()));
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (mpq_class& q : r.c_) q = -q;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.order(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < r.order(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  std::size_t N = r.order();
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < N; ++j) {
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

PowerSeries operator*(const mpq_class& s, const PowerSeries& a) {
  PowerSeries r = a;
  for (mpq_class& q : r.c_) q *= s;
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.c_ == b.c_;
}

PowerSeries reciprocal(const PowerSeries& a) {
  std::size_t N = a.order();
  if (N == 0) return a;
  if (a[0] == 0) throw Error("reciprocal of a series with zero constant term");
  std::vector<mpq_class> b(N);
  mpq_class inv = 1 / a[0];
  b[0] = inv;
  for (std::size_t n = 1; n < N; ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += a[k] * b[n - k];
    }
    b[n] = -inv * acc;
  }
  return PowerSeries(N, std::move(b));
}

PowerSeries int_power(const PowerSeries& a, long e) {
  PowerSeries base = e < 0 ? reciprocal(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  PowerSeries result = PowerSeries::constant(a.order(), 1);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string to_string(const PowerSeries& a) {
  std::string out = "[";
  for (std::size_t n = 0; n < a.order(); ++n) {
    if (n > 0) out += ", ";
    out += a[n].get_str();
  }
  return out + "]";
}

IntPoly poly_add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

IntPoly poly_pow(const IntPoly& a, int e) {
  if (e < 0) throw Error("negative polynomial power");
  IntPoly r{1};
  for (int n = 0; n < e; ++n) r = poly_mul(r, a);
  return r;
}

mpq_class poly_eval(const IntPoly& a, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PowerSeries from_poly(const IntPoly& poly, std::size_t order) {
  std::vector<mpq_class> c(order);
  for (std::size_t n = 0; n < std::min(order, poly.size()); ++n) c[n] = poly[n];
  return PowerSeries(order, std::move(c));
}

PowerSeries expand_rational(const IntPoly& numerator, const IntPoly& denominator,
                            std::size_t order) {
  if (denominator.empty() || denominator[0] == 0) {
    throw Error("denominator has zero constant term");
  }
  return from_poly(numerator, order) * reciprocal(from_poly(denominator, order));
}

std::vector<mpz_class> integer_coeffs(const PowerSeries& a) {
  std::vector<mpz_class> out;
  out.reserve(a.order());
  for (std::size_t n = 0; n < a.order(); ++n) {
    if (a[n].get_den() != 1) {
      throw Error("coefficient of x^" + std::to_string(n) + " is not an integer: " +
                  a[n].get_str());
    }
    out.push_back(a[n].get_num());
  }
  return out;
}

namespace {

void check_p(int p) {
  if (p < 2) throw Error("p must be at least 2, got " + std::to_string(p));
}

PowerSeries one(std::size_t order) { return PowerSeries::constant(order, 1); }

// x^-2 (u^-i - 1) + 1, where u = 1 - x^3 M.
PowerSeries product_closed_form(const PowerSeries& u, int i, std::size_t order) {
  PowerSeries v = int_power(u, -i) - one(u.order());
  return (one(order) + v.shift(-2)).truncate(order);
}

PowerSeries u_of(const PowerSeries& M) {
  PowerSeries x3M = M.shift(3);
  return one(x3M.order()) - x3M;
}

}  // namespace

PowerSeries solve_M(int p, std::size_t order) {
  check_p(p);
  PowerSeries M = one(order);
  for (std::size_t round = 0; round <= order; ++round) {
    PowerSeries next = product_closed_form(u_of(M), p - 1, order);
    if (next == M) break;
    M = std::move(next);
  }
  return M;
}

std::vector<PowerSeries> solve_all_Mi(int p, std::size_t order) {
  check_p(p);
  PowerSeries u = u_of(solve_M(p, order));
  std::vector<PowerSeries> out;
  PowerSeries prev = one(order);
  for (int i = 1; i <= p - 1; ++i) {
    PowerSeries cur = product_closed_form(u, i, order);
    out.push_back(cur * reciprocal(prev));
    prev = std::move(cur);
  }
  return out;
}

PowerSeries solve_Mi(int p, int i, std::size_t order) {
  if (i < 1 || i > p - 1) {
    throw Error("M_i needs 1 <= i <= p-1, got i=" + std::to_string(i));
  }
  return solve_all_Mi(p, order).at(static_cast<std::size_t>(i - 1));
}

GrowthSeriesBundle positive_growth_series(int p, std::size_t order) {
  check_p(p);
  GrowthSeriesBundle b;
  b.p = p;
  b.order = order;
  b.Mi = solve_all_Mi(p, order);
  b.M = one(order);
  for (const PowerSeries& m : b.Mi) b.M = b.M * m;

  PowerSeries x = PowerSeries::monomial(order, 1);
  PowerSeries x2 = PowerSeries::monomial(order, 2);
  PowerSeries left_den = one(order) - x * b.M;
  PowerSeries right_den = one(order) - x2 * b.M;
  b.L = reciprocal(left_den);
  b.R = (one(order) - x2) * b.M_(p - 1) * reciprocal(right_den);
  b.S = (one(order) - x2) * b.M * reciprocal(left_den * right_den);

  b.S_product = b.L;
  for (int i = 1; i <= p - 2; ++i) b.S_product = b.S_product * b.M_(i);
  b.S_product = b.S_product * b.R;
  return b;
}

PowerSeries check_N_equation(int p, std::size_t order) {
  check_p(p);
  PowerSeries M = solve_M(p, order);
  PowerSeries N = reciprocal(u_of(M).truncate(order));
  PowerSeries x = PowerSeries::monomial(order, 1);
  PowerSeries cubic = from_poly({-1, -1, 0, 1}, order);
  return x * int_power(N, p) + cubic * N + one(order);
}

std::vector<NamedResidual> series_residuals(const GrowthSeriesBundle& b) {
  const std::size_t N = b.order;
  const int p = b.p;
  PowerSeries x = PowerSeries::monomial(N, 1);
  PowerSeries x2 = PowerSeries::monomial(N, 2);
  PowerSeries x3 = PowerSeries::monomial(N, 3);
  PowerSeries u = u_of(b.M).truncate(N);
  std::vector<NamedResidual> out;

  // prefix[i] = M_1 ... M_i, suffix[i] = M_i ... M_{p-1}
  std::vector<PowerSeries> prefix{one(N)};
  for (int i = 1; i <= p - 1; ++i) prefix.push_back(prefix.back() * b.M_(i));
  std::vector<PowerSeries> suffix(static_cast<std::size_t>(p + 1), one(N));
  for (int i = p - 1; i >= 1; --i) {
    suffix[static_cast<std::size_t>(i)] = b.M_(i) * suffix[static_cast<std::size_t>(i + 1)];
  }

  out.push_back({"M_product", prefix.back() - b.M});
  for (int i = 1; i <= p - 1; ++i) {
    const PowerSeries& tail = suffix[static_cast<std::size_t>(i)];
    PowerSeries rhs = x * tail + x3 * tail * (prefix[static_cast<std::size_t>(i)] - one(N));
    out.push_back({"middle[" + std::to_string(i) + "]", b.M_(i) - one(N) - rhs});
  }
  out.push_back({"left", b.L - one(N) - x * b.L * b.M});
  out.push_back({"right", b.R - b.M_(p - 1) - x2 * (b.M * b.R - b.M_(p - 1))});
  out.push_back({"S_product", b.S - b.S_product});
  for (int i = 0; i <= p - 1; ++i) {
    out.push_back({"middle_prefix[" + std::to_string(i) + "]",
                   x2 * prefix[static_cast<std::size_t>(i)] - x2 + one(N) -
                       int_power(u, -i)});
  }
  out.push_back({"M_equation", x2 * b.M - int_power(u, -(p - 1)) - x2 + one(N)});
  out.push_back({"S_closed_form",
                 b.S * (one(N) - x * b.M) * (one(N) - x2 * b.M) - (one(N) - x2) * b.M});
  out.push_back({"N_equation", check_N_equation(p, N)});
  return out;
}

}  // namespace fpg
