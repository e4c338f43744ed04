#include <cmath>
#include <set>

#include "doctest.h"
#include "fpg/automaton.hpp"
#include "fpg/diagrams.hpp"
#include "fpg/normal_forms.hpp"

using namespace fpg;

namespace {

PowerSeries poly(std::size_t order, std::vector<long> c) {
  IntPoly p;
  for (long v : c) p.emplace_back(v);
  return from_poly(p, order);
}

PowerSeries one_minus_t_pow(int k, std::size_t order) {
  return int_power(poly(order, {1, -1}), k);
}

}  // namespace

TEST_CASE("state layout") {
  CHECK(state_q() == 0);
  CHECK(state_qi(3, 0) == 1);
  CHECK(state_qi(3, 2) == 3);
  CHECK(state_qi0(3, 1) == 4);
  CHECK(state_qi0(3, 2) == 5);
  CHECK(state_bar(3) == 6);
  CHECK_THROWS_AS(state_qi0(3, 0), Error);
  CountingAutomaton a = build_automaton(3);
  CHECK(a.size() == 7);
  CHECK(a.labels[5] == "q_{2,0}");
}

TEST_CASE("arrow multiplicities") {
  CountingAutomaton a2 = build_automaton(2);
  CHECK(a2.out_degree(state_q()) == 4);
  CHECK(a2.multiplicity[state_q()][state_qi(2, 0)] == 2);
  CHECK(a2.multiplicity[state_q()][state_qi(2, 1)] == 2);

  CountingAutomaton a3 = build_automaton(3);
  std::vector<int> row_q1(7, 0);
  row_q1[state_qi(3, 0)] = 1;
  row_q1[state_qi0(3, 1)] = 1;
  row_q1[state_qi(3, 1)] = 1;
  row_q1[state_qi(3, 2)] = 2;
  CHECK(a3.multiplicity[state_qi(3, 1)] == row_q1);

  for (int p = 2; p <= 6; ++p) {
    CountingAutomaton a = build_automaton(p);
    CHECK(a.out_degree(state_bar(p)) == 1);
    CHECK(a.out_degree(state_q()) == 2 * p);
    CHECK(a.out_degree(state_qi(p, 0)) == 1 + 2 * (p - 1));
    // Only q_i leads into q_{i,0}.
    for (int i = 1; i < p; ++i) {
      int in = 0;
      for (std::size_t u = 0; u < a.size(); ++u) in += a.multiplicity[u][state_qi0(p, i)];
      CHECK(in == 1);
    }
  }
  CHECK_THROWS_AS(build_automaton(1), Error);
}

TEST_CASE("count_paths examples") {
  CHECK(count_paths(2, 0) == 1);
  CHECK(count_paths(2, 1) == 4);
  CHECK(count_paths(2, 2) == 12);
  CHECK(count_paths(2, 3) == 34);
}

TEST_CASE("brute force examples") {
  CHECK(count_language_bruteforce(2, 0) == 1);
  CHECK(count_language_bruteforce(2, 2) == 12);
  CHECK(count_language_bruteforce(3, 1) == 6);
  CHECK_THROWS_AS(count_language_bruteforce(2, 12), Error);
  CHECK_THROWS_AS(count_language_bruteforce(5, 8), Error);
}

TEST_CASE("phi_series") {
  PowerSeries phi2 = phi_series(2, 10);
  CHECK(phi2 == expand_rational({1, 0, 0, 1}, {1, -4, 4, -1}, 10));
  for (int p = 2; p <= 6; ++p) {
    PowerSeries phi = phi_series(p, 3);
    CHECK(phi[0] == 1);
    CHECK(phi[1] == 2 * p);
    CHECK(phi[1] == mpq_class(count_paths(p, 1)));
  }
}

TEST_CASE("path counts, closed form and brute force agree") {
  for (int p = 2; p <= 5; ++p) {
    PowerSeries phi = phi_series(p, 9);
    for (std::size_t n = 0; n <= 8; ++n) {
      if (std::pow(2.0 * p, static_cast<double>(n)) > 2e5) break;
      mpz_class dp = count_paths(p, n);
      CHECK(mpq_class(dp) == phi[n]);
      CHECK(dp == count_language_bruteforce(p, n));
    }
  }
  for (int p = 2; p <= 6; ++p) {
    PowerSeries phi = phi_series(p, 41);
    auto paths = count_paths_by_state(p, 40);
    for (std::size_t n = 0; n <= 40; ++n) {
      mpz_class total = 0;
      for (const mpz_class& c : paths[n]) total += c;
      CHECK(mpq_class(total) == phi[n]);
    }
  }
}

TEST_CASE("per-state generating functions") {
  const std::size_t N = 30;
  for (int p = 2; p <= 6; ++p) {
    PowerSeries t = PowerSeries::monomial(N, 1);
    PowerSeries f = state_series(p, state_q(), N);
    CHECK(f == PowerSeries::constant(N, 1));
    std::vector<PowerSeries> fi;
    for (int i = 0; i < p; ++i) fi.push_back(state_series(p, state_qi(p, i), N));

    PowerSeries sum = mpq_class(2) * f;
    for (const PowerSeries& s : fi) sum = sum + s;
    CHECK((fi[0] - t * sum).is_zero());

    PowerSeries den = one_minus_t_pow(p, N) + one_minus_t_pow(p - 1, N) - f;
    CHECK(fi[static_cast<std::size_t>(p - 1)] * den == mpq_class(2) * t);

    for (int i = 0; i < p; ++i) {
      CHECK(fi[static_cast<std::size_t>(i)] ==
            one_minus_t_pow(p - 1 - i, N) * fi[static_cast<std::size_t>(p - 1)]);
    }
    for (int i = 1; i < p; ++i) {
      CHECK(state_series(p, state_qi0(p, i), N) == t * fi[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("L_p words evaluate to distinct elements") {
  for (int p : {2, 3}) {
    std::set<std::string> seen_pairs;
    std::size_t words = 0;
    std::vector<Word> layer{Word{}};
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        if (!is_in_Lp(p, w)) continue;
        ++words;
        seen_pairs.insert(to_string(evaluate(p, w)));
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(p); ++i) {
          for (int s : {1, -1}) {
            Word x = w;
            x.push_back({i, s});
            next.push_back(std::move(x));
          }
        }
      }
      layer = std::move(next);
    }
    CHECK(seen_pairs.size() == words);
  }
}
