#include "fpg/diagrams.hpp"

#include <algorithm>
#include <iterator>

namespace fpg {

PTree PTree::caret(int p) {
  if (p < 2) throw Error("arity must be at least 2, got " + std::to_string(p));
  return PTree(std::vector<PTree>(static_cast<std::size_t>(p)));
}

std::size_t PTree::caret_count() const noexcept {
  if (is_leaf()) return 0;
  std::size_t n = 1;
  for (const PTree& c : children_) n += c.caret_count();
  return n;
}

std::size_t PTree::leaf_count() const noexcept {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const PTree& c : children_) n += c.leaf_count();
  return n;
}

PTree right_spine(int p, std::size_t k) {
  PTree t;
  for (std::size_t i = 0; i < k; ++i) {
    PTree c = PTree::caret(p);
    c.child(static_cast<std::size_t>(p - 1)) = std::move(t);
    t = std::move(c);
  }
  return t;
}

bool is_right_spine(const PTree& t) noexcept {
  const PTree* node = &t;
  while (!node->is_leaf()) {
    auto kids = node->children();
    for (std::size_t k = 0; k + 1 < kids.size(); ++k) {
      if (!kids[k].is_leaf()) return false;
    }
    node = &kids.back();
  }
  return true;
}

namespace {

bool graft_at(PTree& t, std::size_t& remaining, PTree& subtree) {
  if (t.is_leaf()) {
    if (remaining == 0) {
      t = std::move(subtree);
      return true;
    }
    --remaining;
    return false;
  }
  for (PTree& c : t.children()) {
    if (graft_at(c, remaining, subtree)) return true;
  }
  return false;
}

void write_preorder(const PTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'L';
    return;
  }
  out += 'C';
  for (const PTree& c : t.children()) write_preorder(c, out);
}

PTree read_preorder(std::string_view text, std::size_t& pos, int p) {
  if (pos >= text.size()) throw Error("truncated tree text '" + std::string(text) + "'");
  char c = text[pos++];
  if (c == 'L') return PTree();
  if (c != 'C') {
    throw Error("unexpected character '" + std::string(1, c) +
                "' in tree text at position " + std::to_string(pos - 1));
  }
  PTree t = PTree::caret(p);
  for (PTree& child : t.children()) child = read_preorder(text, pos, p);
  return t;
}

// For each leaf of `coarse`, the subtree of `fine` hanging at that leaf.
void collect_leaf_subtrees(const PTree& coarse, const PTree& fine,
                           std::vector<PTree>& out) {
  if (coarse.is_leaf()) {
    out.push_back(fine);
    return;
  }
  for (std::size_t k = 0; k < coarse.children().size(); ++k) {
    collect_leaf_subtrees(coarse.child(k), fine.child(k), out);
  }
}

void expand_leaves(PTree& t, std::vector<PTree>& subs, std::size_t& next) {
  if (t.is_leaf()) {
    t = std::move(subs[next++]);
    return;
  }
  for (PTree& c : t.children()) expand_leaves(c, subs, next);
}

bool is_exposed(const PTree& t) {
  if (t.is_leaf()) return false;
  auto kids = t.children();
  return std::all_of(kids.begin(), kids.end(),
                     [](const PTree& c) { return c.is_leaf(); });
}

// Leaf index of the first leaf of every exposed caret, in increasing order.
void exposed_starts(const PTree& t, std::size_t& leaf,
                    std::vector<std::size_t>& out) {
  if (t.is_leaf()) {
    ++leaf;
    return;
  }
  if (is_exposed(t)) {
    out.push_back(leaf);
    leaf += t.children().size();
    return;
  }
  for (const PTree& c : t.children()) exposed_starts(c, leaf, out);
}

void collapse(PTree& t, std::size_t& leaf,
              const std::vector<std::size_t>& starts) {
  if (t.is_leaf()) {
    ++leaf;
    return;
  }
  if (is_exposed(t)) {
    std::size_t width = t.children().size();
    if (std::binary_search(starts.begin(), starts.end(), leaf)) t = PTree();
    leaf += width;
    return;
  }
  for (PTree& c : t.children()) collapse(c, leaf, starts);
}

std::vector<std::size_t> common_exposed(const TreePair& d) {
  std::vector<std::size_t> a, b, both;
  std::size_t leaf = 0;
  exposed_starts(d.source, leaf, a);
  leaf = 0;
  exposed_starts(d.target, leaf, b);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both;
}

void require_same_arity(const TreePair& a, const TreePair& b) {
  if (a.p != b.p) {
    throw Error("mismatched p: " + std::to_string(a.p) + " vs " +
                std::to_string(b.p));
  }
}

}  // namespace

void graft(PTree& t, std::size_t leaf, PTree subtree) {
  std::size_t remaining = leaf;
  if (!graft_at(t, remaining, subtree)) {
    throw Error("leaf " + std::to_string(leaf) + " out of range");
  }
}

std::string to_string(const PTree& t) {
  std::string out;
  write_preorder(t, out);
  return out;
}

PTree parse_tree(std::string_view text, int p) {
  std::size_t pos = 0;
  PTree t = read_preorder(text, pos, p);
  if (pos != text.size()) {
    throw Error("trailing characters in tree text '" + std::string(text) + "'");
  }
  return t;
}

PTree common_refinement(const PTree& a, const PTree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  PTree out = a;
  for (std::size_t k = 0; k < a.children().size(); ++k) {
    out.child(k) = common_refinement(a.child(k), b.child(k));
  }
  return out;
}

TreePair identity_pair(int p) { return TreePair{p, PTree(), PTree()}; }

TreePair generator_pair(int p, std::size_t n) {
  if (p < 2) throw Error("p must be at least 2, got " + std::to_string(p));
  std::size_t k = n / static_cast<std::size_t>(p - 1) + 1;
  TreePair d{p, right_spine(p, k), right_spine(p, k + 1)};
  graft(d.source, n, PTree::caret(p));
  return d;
}

TreePair invert(const TreePair& d) { return TreePair{d.p, d.target, d.source}; }

TreePair reduce(const TreePair& d) {
  TreePair out = d;
  for (auto starts = common_exposed(out); !starts.empty();
       starts = common_exposed(out)) {
    std::size_t leaf = 0;
    collapse(out.source, leaf, starts);
    leaf = 0;
    collapse(out.target, leaf, starts);
  }
  return out;
}

bool is_reduced(const TreePair& d) { return common_exposed(d).empty(); }

TreePair compose(const TreePair& a, const TreePair& b) {
  require_same_arity(a, b);
  PTree common = common_refinement(a.target, b.source);

  std::vector<PTree> below_a, below_b;
  collect_leaf_subtrees(a.target, common, below_a);
  collect_leaf_subtrees(b.source, common, below_b);

  TreePair out{a.p, a.source, b.target};
  std::size_t next = 0;
  expand_leaves(out.source, below_a, next);
  next = 0;
  expand_leaves(out.target, below_b, next);
  return reduce(out);
}

TreePair evaluate(int p, const Word& w) {
  TreePair acc = identity_pair(p);
  for (const Letter& l : w) {
    TreePair g = generator_pair(p, l.index);
    acc = compose(acc, l.positive() ? g : invert(g));
  }
  return acc;
}

bool equal(const TreePair& a, const TreePair& b) {
  require_same_arity(a, b);
  return reduce(a) == reduce(b);
}

bool is_positive(const TreePair& d) {
  return is_right_spine(reduce(d).target);
}

std::string to_string(const TreePair& d) {
  return to_string(d.source) + "|" + to_string(d.target);
}

TreePair parse_pair(std::string_view text, int p) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw Error("tree pair text must have the form source|target");
  }
  TreePair d{p, parse_tree(text.substr(0, bar), p),
             parse_tree(text.substr(bar + 1), p)};
  if (d.source.leaf_count() != d.target.leaf_count()) {
    throw Error("source and target leaf counts differ");
  }
  return d;
}

}  // namespace fpg
