#include "fpg/fordham.hpp"

namespace fpg {

int WeightTable::operator()(CaretKind kind) const noexcept {
  switch (kind) {
    case CaretKind::Root: return root;
    case CaretKind::Left: return left;
    case CaretKind::MiddleEmpty: return middle_empty;
    case CaretKind::MiddleFull: return middle_full;
    case CaretKind::RightEmpty: return right_empty;
    case CaretKind::RightFull: return right_full;
  }
  return 0;
}

std::string class_name(const CaretClass& c) {
  switch (c.kind) {
    case CaretKind::Root: return "Root";
    case CaretKind::Left: return "Left";
    case CaretKind::MiddleEmpty: return "M^" + std::to_string(c.middle_index) + "_empty";
    case CaretKind::MiddleFull: return "M^" + std::to_string(c.middle_index) + "_M";
    case CaretKind::RightEmpty: return "R_empty";
    case CaretKind::RightFull: return "R_M";
  }
  return "?";
}

int ClassifiedTree::weight(const WeightTable& table) const {
  int total = 0;
  for (const CaretClass& c : classes) total += table(c.kind);
  return total;
}

namespace {

enum class Base { Root, Left, Right, Middle };

struct BaseType {
  Base base;
  int index = 0;  // i of M^i
};

class Classifier {
 public:
  explicit Classifier(int p) : p_(p) {}

  ClassifiedTree run(const PTree& t, BaseType root = {Base::Root}) {
    visit(t, root);
    ClassifiedTree out;
    out.tree = t;
    out.classes = std::move(classes_);
    out.order = std::move(order_);
    refine_right_carets(out);
    return out;
  }

 private:
  // Type of child k of a caret of type `parent`.
  BaseType child_type(BaseType parent, int k) const {
    switch (parent.base) {
      case Base::Root:
        if (k == 0) return {Base::Left};
        if (k == p_ - 1) return {Base::Right};
        return {Base::Middle, k};
      case Base::Left:
        if (k == 0) return {Base::Left};
        return {Base::Middle, k};
      case Base::Right:
        if (k == 0) return {Base::Middle, p_ - 1};
        if (k == p_ - 1) return {Base::Right};
        return {Base::Middle, k};
      case Base::Middle: {
        int i = parent.index;
        if (k < p_ - i) return {Base::Middle, i + k};
        return {Base::Middle, k - (p_ - i) + 1};
      }
    }
    return {Base::Middle, 1};
  }

  int predecessor_count(BaseType t) const {
    return t.base == Base::Middle ? p_ - t.index : 1;
  }

  void visit(const PTree& node, BaseType type) {
    std::size_t id = classes_.size();
    classes_.push_back({});
    auto kids = node.children();
    if (static_cast<int>(kids.size()) != p_) {
      throw Error("caret with " + std::to_string(kids.size()) +
                  " children in a tree of arity " + std::to_string(p_));
    }

    int preds = predecessor_count(type);
    bool successor_caret = false;
    for (int k = 0; k < p_; ++k) {
      if (k == preds) order_.push_back(id);
      const PTree& c = kids[static_cast<std::size_t>(k)];
      if (c.is_leaf()) continue;
      if (k >= preds) successor_caret = true;
      visit(c, child_type(type, k));
    }

    CaretClass& cls = classes_[id];
    switch (type.base) {
      case Base::Root: cls = {CaretKind::Root, 0}; break;
      case Base::Left: cls = {CaretKind::Left, 0}; break;
      // Provisional; settled by refine_right_carets once the order is known.
      case Base::Right: cls = {CaretKind::RightEmpty, 0}; break;
      case Base::Middle:
        cls = {successor_caret ? CaretKind::MiddleFull : CaretKind::MiddleEmpty,
               type.index};
        break;
    }
  }

  // A right caret is full iff some middle caret comes after it in the order.
  static void refine_right_carets(ClassifiedTree& t) {
    bool middle_after = false;
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      CaretClass& c = t.classes[*it];
      if (c.kind == CaretKind::RightEmpty && middle_after) {
        c.kind = CaretKind::RightFull;
      }
      if (c.kind == CaretKind::MiddleEmpty || c.kind == CaretKind::MiddleFull) {
        middle_after = true;
      }
    }
  }

  int p_;
  std::vector<CaretClass> classes_;
  std::vector<std::size_t> order_;
};

}  // namespace

ClassifiedTree classify(int p, const PTree& t) {
  if (t.is_leaf()) {
    throw Error("cannot classify an empty tree (the identity has no carets)");
  }
  return Classifier(p).run(t);
}

int middle_subtree_weight(int p, const PTree& t, int i, const WeightTable& table) {
  if (t.is_leaf()) return 0;
  if (i < 1 || i > p - 1) throw Error("M^i needs 1 <= i <= p-1");
  return Classifier(p).run(t, {Base::Middle, i}).weight(table);
}

int tree_weight(int p, const PTree& t, const WeightTable& table) {
  if (t.is_leaf()) return 0;
  return classify(p, t).weight(table);
}

int positive_length(const TreePair& d, const WeightTable& table) {
  TreePair r = reduce(d);
  if (!is_right_spine(r.target)) {
    throw Error("Fordham positive method inapplicable: element is not positive");
  }
  return tree_weight(r.p, r.source, table);
}

int positive_length(int p, const Word& w, const WeightTable& table) {
  return positive_length(evaluate(p, w), table);
}

}  // namespace fpg
