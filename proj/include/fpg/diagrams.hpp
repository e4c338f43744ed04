#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

/// A rooted p-tree. A node is either a leaf or a caret with exactly p
/// ordered children. The arity is carried by the carets themselves, so a
/// bare leaf is valid for every p.
class PTree {
 public:
  PTree() = default;

  /// A single caret of arity p whose children are leaves.
  static PTree caret(int p);

  bool is_leaf() const noexcept { return children_.empty(); }
  std::span<const PTree> children() const noexcept { return children_; }
  std::span<PTree> children() noexcept { return children_; }
  const PTree& child(std::size_t k) const { return children_.at(k); }
  PTree& child(std::size_t k) { return children_.at(k); }

  std::size_t caret_count() const noexcept;
  std::size_t leaf_count() const noexcept;

  friend bool operator==(const PTree& a, const PTree& b) {
    return a.children_ == b.children_;
  }

 private:
  explicit PTree(std::vector<PTree> children)
      : children_(std::move(children)) {}

  std::vector<PTree> children_;
};

/// R_k: k carets, each hanging from child p-1 of the previous one.
PTree right_spine(int p, std::size_t k);

bool is_right_spine(const PTree& t) noexcept;

/// Replaces leaf number `leaf` (0-based, left to right) with `subtree`.
void graft(PTree& t, std::size_t leaf, PTree subtree);

/// Preorder text form: `C` followed by the children, `L` for a leaf.
std::string to_string(const PTree& t);

/// Parses the preorder text form; every caret must have p children.
PTree parse_tree(std::string_view text, int p);

/// Smallest tree containing every caret of both inputs.
PTree common_refinement(const PTree& a, const PTree& b);

/// An ordered pair of p-trees with equal leaf counts. The word g1 g2 is
/// represented by compose(g1, g2).
struct TreePair {
  int p = 2;
  PTree source;
  PTree target;

  friend bool operator==(const TreePair&, const TreePair&) = default;
};

TreePair identity_pair(int p);

/// Reduced diagram of the generator x_n.
TreePair generator_pair(int p, std::size_t n);

TreePair invert(const TreePair& d);

/// Removes caret pairs exposed at the same leaf range in both trees until
/// none remain.
TreePair reduce(const TreePair& d);

bool is_reduced(const TreePair& d);

/// Reduced diagram of the product a*b.
TreePair compose(const TreePair& a, const TreePair& b);

/// Reduced diagram of the element represented by w.
TreePair evaluate(int p, const Word& w);

/// Solves the word problem: equality of reduced representatives.
bool equal(const TreePair& a, const TreePair& b);

/// True iff the target of the reduced pair is a right spine.
bool is_positive(const TreePair& d);

/// `source|target` in preorder text form.
std::string to_string(const TreePair& d);

/// Inverse of to_string(TreePair).
TreePair parse_pair(std::string_view text, int p);

}  // namespace fpg
