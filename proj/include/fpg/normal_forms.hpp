#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

/// Rules of the complete rewriting system for F(p), with j > i:
///   Cancel        x_i^e x_i^-e        -> 1
///   PushPositive  x_j^e x_i           -> x_i x_{j+p-1}^e
///   PushNegative  x_{j+p-1}^e x_i^-1  -> x_i^-1 x_j^e
enum class RuleKind { Cancel, PushNegative, PushPositive };

std::string rule_name(RuleKind rule);

struct RewriteStep {
  RuleKind rule;
  std::size_t position;  // index of the left letter of the redex
  Word before;
  Word after;
};

/// The rule whose left side is the pair (a, b), if any. At most one rule
/// matches any pair.
std::optional<RuleKind> rule_for_pair(int p, Letter a, Letter b);

/// All positions i such that (w[i], w[i+1]) is a redex.
std::vector<std::size_t> redex_positions(int p, const Word& w);

/// Rewrites the redex at `position` in place.
RuleKind apply_rule(int p, Word& w, std::size_t position);

/// Upper bound on the number of rewriting steps from w, derived from the
/// (length, subscript vector) termination order.
std::size_t step_budget(const Word& w);

struct RewriteRun {
  Word result;
  std::size_t steps = 0;
  std::vector<RewriteStep> trace;
};

/// Picks one entry of a nonempty list of redex positions.
using RedexChooser = std::function<std::size_t(std::span<const std::size_t>)>;

/// Rewrites until irreducible, choosing redexes with `choose`. Throws if
/// the step budget is exhausted.
RewriteRun rewrite(int p, Word w, const RedexChooser& choose,
                   bool record_trace = false);

/// Deterministic leftmost-redex rewriting.
RewriteRun rewrite_leftmost(int p, Word w, bool record_trace = false);

/// The unique irreducible word equal to w.
Word to_infinite_nf(int p, const Word& w);

bool is_irreducible_pair(int p, Letter a, Letter b);

/// True iff every adjacent pair of letters is irreducible.
bool is_infinite_nf(int p, const Word& w);

/// j = r + d(p-1) with 1 <= r <= p-1 and d >= 0, for j >= 1.
struct SubscriptSplit {
  std::uint32_t r;
  std::uint32_t d;
};
SubscriptSplit split_subscript(int p, std::uint32_t j);

/// One block x_0^{k} x_alpha^{l} of a word written as
///   x_0^{k_0} x_{a_1}^{l_1} x_0^{k_1} ... x_{a_h}^{l_h} x_0^{k_h}.
struct SpineBlock {
  long k;          // exponent of the x_0 run before the block
  std::uint32_t alpha;
  long l;          // nonzero exponent of x_alpha
  std::uint32_t r;
  std::uint32_t d;
};

struct SpineDecomposition {
  std::vector<SpineBlock> blocks;
  long trailing_k = 0;

  std::size_t h() const noexcept { return blocks.size(); }
};

/// Groups a freely reduced word into x_0 runs and runs of one non-x_0
/// letter.
SpineDecomposition decompose(int p, const Word& w);

Word compose_word(const SpineDecomposition& s);

/// Replaces each x_j^e (j >= 1) by x_0^-d x_r^e x_0^d and cancels x_0 pairs.
Word bar(int p, const Word& w);

/// Membership in L_p: no forbidden subword. Throws if an index exceeds p-1.
bool is_in_Lp(int p, const Word& v);

/// The unique w in N_inf with bar(w) = v. Throws unless v is in L_p.
Word unbar(int p, const Word& v);

/// bar(to_infinite_nf(w)): the regular normal form over x_0, ..., x_{p-1}.
Word finite_nf(int p, const Word& w);

}  // namespace fpg
