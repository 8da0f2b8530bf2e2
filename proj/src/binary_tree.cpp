#include "dexter/binary_tree.hpp"

namespace dexter {

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  BinaryTree t;
  t.root_ = std::make_shared<const Node>(
      Node{std::move(left.root_), std::move(right.root_)});
  return t;
}

BinaryTree BinaryTree::left() const {
  BinaryTree t;
  t.root_ = root_->left;
  return t;
}

BinaryTree BinaryTree::right() const {
  BinaryTree t;
  t.root_ = root_->right;
  return t;
}

int BinaryTree::inner_count() const {
  if (is_leaf()) return 0;
  return 1 + left().inner_count() + right().inner_count();
}

int BinaryTree::rightmost_branch_length() const {
  int count = 0;
  BinaryTree t = *this;
  while (!t.is_leaf()) {
    ++count;
    t = t.right();
  }
  return count;
}

std::string BinaryTree::str() const {
  if (is_leaf()) return "o";
  return "(" + left().str() + "," + right().str() + ")";
}

bool BinaryTree::equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  return equal(a->left.get(), b->left.get()) &&
         equal(a->right.get(), b->right.get());
}

namespace {

BinaryTree replace_rightmost_leaf(const BinaryTree& t,
                                  const BinaryTree& graft) {
  if (t.is_leaf()) return graft;
  return BinaryTree::node(t.left(), replace_rightmost_leaf(t.right(), graft));
}

// Replaces the second leaf from the right, i.e. the rightmost leaf of the
// left child of the deepest node on the right branch.
BinaryTree replace_second_leaf(const BinaryTree& t, const BinaryTree& graft) {
  if (t.right().is_leaf())
    return BinaryTree::node(replace_rightmost_leaf(t.left(), graft),
                            BinaryTree::leaf());
  return BinaryTree::node(t.left(), replace_second_leaf(t.right(), graft));
}

}  // namespace

BinaryTree to_binary_tree(const DyckPath& w) {
  if (w.empty()) return BinaryTree::leaf();
  std::vector<DyckPath> parts = blocks(w);
  if (parts.size() == 1) {
    DyckPath inside(w.word().slice(1, w.length() - 2));
    return replace_rightmost_leaf(
        to_binary_tree(inside),
        BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()));
  }
  DyckPath last = parts.back();
  DyckPath front(w.word().slice(0, w.length() - last.length()));
  return replace_second_leaf(to_binary_tree(last), to_binary_tree(front));
}

DyckPath from_binary_tree(const BinaryTree& t) {
  if (t.is_leaf()) return DyckPath();
  // Locate the parent of the rightmost leaf, tracking the spine above it.
  std::vector<BinaryTree> spine;
  BinaryTree v = t;
  while (!v.right().is_leaf()) {
    spine.push_back(v);
    v = v.right();
  }
  if (v.left().is_leaf()) {
    // Remove v and wrap the remaining tree in one block.
    BinaryTree rest = BinaryTree::leaf();
    for (auto it = spine.rbegin(); it != spine.rend(); ++it)
      rest = BinaryTree::node(it->left(), rest);
    StepWord word;
    word.append(1);
    word.append(from_binary_tree(rest).word());
    word.append(0);
    return DyckPath(word);
  }
  // Cut off the left subtree of v and replace it by a leaf.
  BinaryTree cut = BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf());
  for (auto it = spine.rbegin(); it != spine.rend(); ++it)
    cut = BinaryTree::node(it->left(), cut);
  return concat(from_binary_tree(v.left()), from_binary_tree(cut));
}

}  // namespace dexter
