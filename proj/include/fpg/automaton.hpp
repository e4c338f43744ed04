#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fpg/series.hpp"

namespace fpg {

/// Unlabelled graph on 2p+1 states whose paths from q count the words of
/// L_p. States, in matrix order:
///   0            q        the empty word
///   1 + i        q_i      ends in x_i^{+-1} (i = 0: and no x_j x_0^k tail, j >= 1)
///   p + i        q_{i,0}  ends in x_i^{+-1} x_0, 1 <= i <= p-1
///   2p           q_bar    ends in x_i^{+-1} x_0^k, k >= 2
struct CountingAutomaton {
  int p = 0;
  std::vector<std::string> labels;
  std::vector<std::string> meaning;
  std::vector<std::vector<int>> multiplicity;  // [from][to]

  std::size_t size() const noexcept { return labels.size(); }
  int out_degree(std::size_t state) const;
};

std::size_t state_q();
std::size_t state_qi(int p, int i);
std::size_t state_qi0(int p, int i);
std::size_t state_bar(int p);

CountingAutomaton build_automaton(int p);

/// paths[n][s] = number of paths of length n from q ending at state s.
std::vector<std::vector<mpz_class>> count_paths_by_state(int p, std::size_t max_n);

/// Number of words of length n in L_p.
mpz_class count_paths(int p, std::size_t n);

/// sum_n paths[n][state] t^n.
PowerSeries state_series(int p, std::size_t state, std::size_t order);

/// Closed form (1+t)(1 - t(1-t)^{p-1}) / ((1-t)((1-t)^p + (1-t)^{p-1} - 1)).
IntPoly phi_numerator(int p);
IntPoly phi_denominator(int p);
PowerSeries phi_series(int p, std::size_t order);

constexpr double kBruteForceLimit = 1e7;

/// Counts length-n words in L_p by enumerating all (2p)^n words.
mpz_class count_language_bruteforce(int p, std::size_t n);

}  // namespace fpg
