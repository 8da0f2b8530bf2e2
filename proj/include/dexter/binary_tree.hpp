#pragma once

// Planar rooted binary trees and the size-preserving bijection with Dyck
// paths that sends the number of final zeros to the length of the
// rightmost branch.

#include <memory>
#include <string>

#include "dexter/dyck.hpp"

namespace dexter {

/// An immutable planar rooted binary tree; a default-constructed value is
/// a single leaf.  Inner nodes have exactly two ordered children.
class BinaryTree {
 public:
  BinaryTree() = default;
  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool is_leaf() const { return root_ == nullptr; }
  BinaryTree left() const;
  BinaryTree right() const;

  int inner_count() const;
  int leaf_count() const { return inner_count() + 1; }

  /// Number of inner vertices on the path root, root.right, ...
  int rightmost_branch_length() const;

  /// Parenthesized shape, e.g. "((o,o),o)" with "o" for a leaf.
  std::string str() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return equal(a.root_.get(), b.root_.get());
  }

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
  };
  static bool equal(const Node* a, const Node* b);
  std::shared_ptr<const Node> root_;
};

/// The recursive bijection from Dyck paths of size n to binary trees with
/// n inner vertices: a block (1,w',0) adds an inner vertex on the
/// rightmost leaf of the image of w'; a product w1 w2 (cut before the last
/// block) grafts the image of w1 onto the second leaf from the right of
/// the image of w2.
BinaryTree to_binary_tree(const DyckPath& w);

/// Inverse of to_binary_tree.
DyckPath from_binary_tree(const BinaryTree& t);

}  // namespace dexter
