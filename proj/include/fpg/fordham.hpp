#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/diagrams.hpp"

namespace fpg {

enum class CaretKind { Root, Left, MiddleEmpty, MiddleFull, RightEmpty, RightFull };

/// Fordham's caret types for positive elements. `middle_index` is the i of
/// M^i (1 <= i <= p-1) for middle carets and 0 otherwise.
struct CaretClass {
  CaretKind kind = CaretKind::Root;
  int middle_index = 0;

  friend bool operator==(const CaretClass&, const CaretClass&) = default;
};

/// Weight assigned to each caret kind. The defaults are Fordham's table;
/// other values exist only to mutation-test the oracle harness.
struct WeightTable {
  int root = 0;
  int left = 1;
  int middle_empty = 1;
  int middle_full = 3;
  int right_empty = 0;
  int right_full = 2;

  int operator()(CaretKind kind) const noexcept;

  friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

/// "Root", "Left", "M^i_empty", "M^i_M", "R_empty", "R_M".
std::string class_name(const CaretClass& c);

/// Carets are identified by their position in a preorder walk of the tree
/// (carets only, leaves skipped).
struct ClassifiedTree {
  PTree tree;
  std::vector<CaretClass> classes;  // indexed by preorder caret id
  std::vector<std::size_t> order;   // caret ids in Fordham's total order

  int weight(const WeightTable& table = {}) const;
};

ClassifiedTree classify(int p, const PTree& t);

/// Sum of caret weights of a tree; 0 for the bare leaf.
int tree_weight(int p, const PTree& t, const WeightTable& table = {});

/// Weight of a subtree whose root caret has type M^i.
int middle_subtree_weight(int p, const PTree& t, int i, const WeightTable& table = {});

/// Word length of a positive element in generators x_0, ..., x_{p-1}.
/// Throws if the element is not positive.
int positive_length(const TreePair& d, const WeightTable& table = {});
int positive_length(int p, const Word& w, const WeightTable& table = {});

}  // namespace fpg
