#include "fpg/normal_forms.hpp"

namespace fpg {

std::string rule_name(RuleKind rule) {
  switch (rule) {
    case RuleKind::Cancel: return "cancel";
    case RuleKind::PushNegative: return "push_negative";
    case RuleKind::PushPositive: return "push_positive";
  }
  return "?";
}

std::optional<RuleKind> rule_for_pair(int p, Letter a, Letter b) {
  if (a.index == b.index && a.sign == -b.sign) return RuleKind::Cancel;
  if (!b.positive() &&
      static_cast<std::uint64_t>(a.index) >=
          static_cast<std::uint64_t>(b.index) + static_cast<std::uint64_t>(p)) {
    return RuleKind::PushNegative;
  }
  if (b.positive() && a.index > b.index) return RuleKind::PushPositive;
  return std::nullopt;
}

std::vector<std::size_t> redex_positions(int p, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rule_for_pair(p, w[i], w[i + 1])) out.push_back(i);
  }
  return out;
}

RuleKind apply_rule(int p, Word& w, std::size_t position) {
  if (position + 1 >= w.size()) throw Error("redex position out of range");
  Letter a = w[position];
  Letter b = w[position + 1];
  auto rule = rule_for_pair(p, a, b);
  if (!rule) {
    throw Error("no rule applies at position " + std::to_string(position));
  }
  auto shift = static_cast<std::uint32_t>(p - 1);
  auto at = w.begin() + static_cast<std::ptrdiff_t>(position);
  switch (*rule) {
    case RuleKind::Cancel:
      w.erase(at, at + 2);
      break;
    case RuleKind::PushPositive:
      w[position] = b;
      w[position + 1] = {a.index + shift, a.sign};
      break;
    case RuleKind::PushNegative:
      w[position] = b;
      w[position + 1] = {a.index - shift, a.sign};
      break;
  }
  return *rule;
}

std::size_t step_budget(const Word& w) {
  // Cancellations remove two letters each. Between cancellations every step
  // swaps a pair of letters, and no pair of letters is swapped twice.
  std::size_t n = w.size();
  return n / 2 + n * (n - (n > 0 ? 1 : 0)) / 2;
}

namespace {

void record(std::vector<RewriteStep>& trace, RuleKind rule,
            std::size_t position, const Word& before, const Word& after) {
  trace.push_back({rule, position, before, after});
}

[[noreturn]] void budget_exhausted(const Word& start, std::size_t budget) {
  throw Error("rewriting of '" + format_word(start) + "' exceeded the budget of " +
              std::to_string(budget) + " steps");
}

}  // namespace

RewriteRun rewrite(int p, Word w, const RedexChooser& choose,
                   bool record_trace) {
  const Word start = w;
  const std::size_t budget = step_budget(w);
  RewriteRun run;
  for (auto redexes = redex_positions(p, w); !redexes.empty();
       redexes = redex_positions(p, w)) {
    if (run.steps == budget) budget_exhausted(start, budget);
    std::size_t position = choose(redexes);
    Word before = record_trace ? w : Word{};
    RuleKind rule = apply_rule(p, w, position);
    if (record_trace) record(run.trace, rule, position, before, w);
    ++run.steps;
  }
  run.result = std::move(w);
  return run;
}

RewriteRun rewrite_leftmost(int p, Word w, bool record_trace) {
  const Word start = w;
  const std::size_t budget = step_budget(w);
  RewriteRun run;
  // Pairs left of `i` are irreducible; a rewrite at i can only create a new
  // redex at i - 1.
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (!rule_for_pair(p, w[i], w[i + 1])) {
      ++i;
      continue;
    }
    if (run.steps == budget) budget_exhausted(start, budget);
    Word before = record_trace ? w : Word{};
    RuleKind rule = apply_rule(p, w, i);
    if (record_trace) record(run.trace, rule, i, before, w);
    ++run.steps;
    if (i > 0) --i;
  }
  run.result = std::move(w);
  return run;
}

Word to_infinite_nf(int p, const Word& w) {
  return rewrite_leftmost(p, w).result;
}

bool is_irreducible_pair(int p, Letter a, Letter b) {
  return !rule_for_pair(p, a, b).has_value();
}

bool is_infinite_nf(int p, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!is_irreducible_pair(p, w[i], w[i + 1])) return false;
  }
  return true;
}

SubscriptSplit split_subscript(int p, std::uint32_t j) {
  if (j == 0) throw Error("x_0 has no (r, d) split");
  auto step = static_cast<std::uint32_t>(p - 1);
  return {(j - 1) % step + 1, (j - 1) / step};
}

SpineDecomposition decompose(int p, const Word& w) {
  SpineDecomposition s;
  long run = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    const Letter& l = w[i];
    if (l.index == 0) {
      run += l.sign;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == l) ++j;
    SubscriptSplit rd = split_subscript(p, l.index);
    s.blocks.push_back({run, l.index, l.sign * static_cast<long>(j - i), rd.r, rd.d});
    run = 0;
    i = j;
  }
  s.trailing_k = run;
  return s;
}

namespace {

void append_power(Word& w, std::uint32_t index, long exponent) {
  Letter l{index, exponent < 0 ? -1 : 1};
  for (long n = exponent < 0 ? -exponent : exponent; n > 0; --n) w.push_back(l);
}

}  // namespace

Word compose_word(const SpineDecomposition& s) {
  Word w;
  for (const SpineBlock& b : s.blocks) {
    append_power(w, 0, b.k);
    append_power(w, b.alpha, b.l);
  }
  append_power(w, 0, s.trailing_k);
  return w;
}

Word bar(int p, const Word& w) {
  Word out;
  out.reserve(w.size());
  auto push_x0 = [&out](int sign) {
    if (!out.empty() && out.back() == Letter{0, -sign}) {
      out.pop_back();
    } else {
      out.push_back({0, sign});
    }
  };
  for (const Letter& l : w) {
    if (l.index == 0) {
      push_x0(l.sign);
      continue;
    }
    SubscriptSplit rd = split_subscript(p, l.index);
    for (std::uint32_t n = 0; n < rd.d; ++n) push_x0(-1);
    out.push_back({rd.r, l.sign});
    for (std::uint32_t n = 0; n < rd.d; ++n) push_x0(1);
  }
  return out;
}

bool is_in_Lp(int p, const Word& v) {
  if (!uses_finite_alphabet(v, p)) {
    throw Error("word '" + format_word(v) + "' uses a subscript above " +
                std::to_string(p - 1));
  }
  // Last non-x_0 letter and the number of x_0 letters after it, provided
  // they are all positive.
  std::optional<Letter> anchor;
  std::size_t run = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Letter& l = v[i];
    if (i > 0 && v[i - 1] == l.inverse()) return false;
    if (l.index == 0) {
      if (l.positive()) {
        ++run;
      } else {
        anchor.reset();
      }
      continue;
    }
    if (anchor) {
      std::uint32_t alpha = anchor->index;
      std::uint32_t beta = l.index;
      bool forbidden = l.positive()
                           ? (beta < alpha || run >= 1)
                           : ((beta < alpha && run >= 1) || run >= 2);
      if (forbidden) return false;
    }
    anchor = l;
    run = 0;
  }
  return true;
}

Word unbar(int p, const Word& v) {
  if (!is_in_Lp(p, v)) {
    throw Error("word '" + format_word(v) + "' is not in L_" + std::to_string(p));
  }
  const SpineDecomposition in = decompose(p, v);
  SpineDecomposition out = in;
  const std::size_t h = in.h();
  auto step = static_cast<std::uint32_t>(p - 1);

  // Right to left: the x_0 exponent after block i together with d_i is
  // either (negative, 0) or (0, nonnegative).
  long value = in.trailing_k;
  for (std::size_t b = h; b-- > 0;) {
    long k_after = value < 0 ? value : 0;
    long d = value < 0 ? 0 : value;
    if (b + 1 == h) {
      out.trailing_k = k_after;
    } else {
      out.blocks[b + 1].k = k_after;
    }
    SpineBlock& blk = out.blocks[b];
    blk.d = static_cast<std::uint32_t>(d);
    blk.alpha = blk.r + blk.d * step;
    value = in.blocks[b].k + d;
  }
  if (h == 0) {
    out.trailing_k = value;
  } else {
    out.blocks[0].k = value;
  }
  return compose_word(out);
}

Word finite_nf(int p, const Word& w) { return bar(p, to_infinite_nf(p, w)); }

}  // namespace fpg
