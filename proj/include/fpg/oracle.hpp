#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "fpg/diagrams.hpp"
#include "fpg/fordham.hpp"

namespace fpg {

constexpr double kCensusTreeLimit = 2e7;
constexpr double kBallLimit = 1e6;

struct PositiveCensus {
  int p = 0;
  int max_weight = 0;
  std::vector<std::uint64_t> counts;  // counts[w], w = 0..max_weight
  std::vector<std::vector<PTree>> witnesses;
  std::uint64_t trees_examined = 0;
  int max_right_empty = 0;  // over all reduced trees examined
};

/// Number of p-trees with at most n carets (Fuss-Catalan sum).
mpz_class trees_up_to(int p, int n);

/// A lone tree T, read as the pair (T, right spine), is reduced iff T is
/// empty or the last caret on its right spine has a caret among children
/// 0..p-2.
bool is_reduced_positive_tree(int p, const PTree& t);

/// Counts reduced positive elements by weight, over all trees with at most
/// max_weight + 2 carets (only the root and one R_empty caret weigh 0).
PositiveCensus enumerate_positive_by_weight(int p, int max_weight,
                                            const WeightTable& table = {},
                                            std::size_t witnesses_per_weight = 0);

struct BallEntry {
  TreePair element;
  int distance = 0;
  Word geodesic;
};

struct BallStats {
  int p = 0;
  int radius = 0;
  std::vector<std::uint64_t> sphere_sizes;
  std::vector<std::uint64_t> ball_sizes;
  std::vector<BallEntry> elements;  // in BFS order
  std::unordered_map<std::string, std::size_t> index;  // to_string(reduced pair) -> element
};

/// Breadth-first search of the Cayley graph from the identity, multiplying
/// on the right by x_0^{+-1}, ..., x_{p-1}^{+-1}.
BallStats bfs_group_ball(int p, int radius);

/// Positive normal forms x_{i_1} ... x_{i_m}, i_1 <= ... <= i_m <= index_bound,
/// m <= max_len, shortest first.
std::vector<Word> bfs_positive_monoid(int p, std::size_t max_len, std::uint32_t index_bound);

enum class Profile { Small, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string details;
  double seconds = 0;
};

struct VerifyReport {
  int p = 0;
  Profile profile = Profile::Small;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every cross-check for one p. Failures and exceptions are recorded
/// per check; nothing short-circuits.
VerifyReport verify_suite(int p, Profile profile, const WeightTable& table = {});

}  // namespace fpg
