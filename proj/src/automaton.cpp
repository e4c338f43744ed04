#include "fpg/automaton.hpp"

#include <cmath>

#include "fpg/normal_forms.hpp"

namespace fpg {

namespace {

void check_p(int p) {
  if (p < 2) throw Error("p must be at least 2, got " + std::to_string(p));
}

}  // namespace

std::size_t state_q() { return 0; }
std::size_t state_qi(int p, int i) {
  if (i < 0 || i > p - 1) throw Error("no state q_" + std::to_string(i));
  return static_cast<std::size_t>(1 + i);
}
std::size_t state_qi0(int p, int i) {
  if (i < 1 || i > p - 1) throw Error("no state q_{" + std::to_string(i) + ",0}");
  return static_cast<std::size_t>(p + i);
}
std::size_t state_bar(int p) { return static_cast<std::size_t>(2 * p); }

int CountingAutomaton::out_degree(std::size_t state) const {
  int total = 0;
  for (int m : multiplicity.at(state)) total += m;
  return total;
}

CountingAutomaton build_automaton(int p) {
  check_p(p);
  CountingAutomaton a;
  a.p = p;
  std::size_t n = static_cast<std::size_t>(2 * p + 1);
  a.labels.resize(n);
  a.meaning.resize(n);
  a.multiplicity.assign(n, std::vector<int>(n, 0));

  a.labels[state_q()] = "q";
  a.meaning[state_q()] = "empty word";
  for (int i = 0; i < p; ++i) {
    a.labels[state_qi(p, i)] = "q_" + std::to_string(i);
    a.meaning[state_qi(p, i)] =
        i == 0 ? "ends in x_0^{+-1}, no tail x_j^{+-1} x_0^k with j >= 1"
               : "ends in x_" + std::to_string(i) + "^{+-1}";
  }
  for (int i = 1; i < p; ++i) {
    a.labels[state_qi0(p, i)] = "q_{" + std::to_string(i) + ",0}";
    a.meaning[state_qi0(p, i)] = "ends in x_" + std::to_string(i) + "^{+-1} x_0";
  }
  a.labels[state_bar(p)] = "q_bar";
  a.meaning[state_bar(p)] = "ends in x_j^{+-1} x_0^k, j >= 1, k >= 2";

  auto& m = a.multiplicity;
  for (int i = 0; i < p; ++i) m[state_q()][state_qi(p, i)] = 2;

  m[state_qi(p, 0)][state_qi(p, 0)] = 1;
  for (int j = 1; j < p; ++j) m[state_qi(p, 0)][state_qi(p, j)] = 2;

  for (int i = 1; i < p; ++i) {
    auto& row = m[state_qi(p, i)];
    row[state_qi(p, 0)] = 1;
    row[state_qi0(p, i)] = 1;
    for (int j = 1; j < p; ++j) row[state_qi(p, j)] = j <= i ? 1 : 2;
  }

  for (int i = 1; i < p; ++i) {
    auto& row = m[state_qi0(p, i)];
    row[state_bar(p)] = 1;
    for (int j = i; j < p; ++j) row[state_qi(p, j)] = 1;
  }

  m[state_bar(p)][state_bar(p)] = 1;
  return a;
}

std::vector<std::vector<mpz_class>> count_paths_by_state(int p, std::size_t max_n) {
  CountingAutomaton a = build_automaton(p);
  std::size_t S = a.size();
  std::vector<std::vector<mpz_class>> paths;
  std::vector<mpz_class> row(S);
  row[state_q()] = 1;
  paths.push_back(row);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<mpz_class> next(S);
    for (std::size_t u = 0; u < S; ++u) {
      if (row[u] == 0) continue;
      for (std::size_t v = 0; v < S; ++v) {
        if (a.multiplicity[u][v] != 0) next[v] += row[u] * a.multiplicity[u][v];
      }
    }
    row = std::move(next);
    paths.push_back(row);
  }
  return paths;
}

mpz_class count_paths(int p, std::size_t n) {
  auto paths = count_paths_by_state(p, n);
  mpz_class total = 0;
  for (const mpz_class& c : paths.back()) total += c;
  return total;
}

PowerSeries state_series(int p, std::size_t state, std::size_t order) {
  if (order == 0) return PowerSeries(0);
  auto paths = count_paths_by_state(p, order - 1);
  std::vector<mpq_class> c;
  for (const auto& row : paths) c.emplace_back(row.at(state));
  return PowerSeries(order, std::move(c));
}

IntPoly phi_numerator(int p) {
  check_p(p);
  IntPoly t_term = poly_mul({0, 1}, poly_pow({1, -1}, p - 1));
  IntPoly inner = poly_add({1}, poly_mul({-1}, t_term));
  return poly_mul({1, 1}, inner);
}

IntPoly phi_denominator(int p) {
  check_p(p);
  IntPoly inner = poly_add(poly_add(poly_pow({1, -1}, p), poly_pow({1, -1}, p - 1)), {-1});
  return poly_mul({1, -1}, inner);
}

PowerSeries phi_series(int p, std::size_t order) {
  return expand_rational(phi_numerator(p), phi_denominator(p), order);
}

mpz_class count_language_bruteforce(int p, std::size_t n) {
  check_p(p);
  double words = std::pow(2.0 * p, static_cast<double>(n));
  if (words > kBruteForceLimit) {
    throw Error("brute force over " + std::to_string(static_cast<long long>(words)) +
                " words exceeds the limit of 10^7; use count_paths instead");
  }
  const std::size_t alphabet = static_cast<std::size_t>(2 * p);
  auto letter = [](std::size_t k) {
    return Letter{static_cast<std::uint32_t>(k / 2), k % 2 == 0 ? 1 : -1};
  };
  std::vector<std::size_t> digits(n, 0);
  Word w(n, letter(0));
  mpz_class count = 0;
  while (true) {
    if (is_in_Lp(p, w)) ++count;
    std::size_t k = 0;
    while (k < n && ++digits[k] == alphabet) {
      digits[k] = 0;
      w[k] = letter(0);
      ++k;
    }
    if (k == n) break;
    w[k] = letter(digits[k]);
  }
  return count;
}

}  // namespace fpg
