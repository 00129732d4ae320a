// SPDX-License-Identifier: Apache-2.0

#ifndef CTM_ORACLE_HPP
#define CTM_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <ctm/order.hpp>

namespace ctm::oracle {

  /// Explicit Cartesian tree with arena storage. Node positions are 1-based
  /// into the sequence the tree was built from.
  struct CartesianTree {
    struct Node {
      Position position = 0;
      std::optional<std::size_t> left;
      std::optional<std::size_t> right;
    };

    std::vector<Node> nodes;
    std::optional<std::size_t> root;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
    [[nodiscard]] bool empty() const noexcept { return !root.has_value(); }

    /// Parenthesised shape dump for test failure messages, e.g. "(.1(.2.))".
    [[nodiscard]] std::string to_string() const;
  };

  /// Linear stack construction.
  template <Element T>
  [[nodiscard]] CartesianTree build_cartesian_tree(Sequence<T> s);

  /// The recursive definition taken literally: the minimum becomes the root,
  /// the prefix before it the left subtree and the suffix after it the right
  /// subtree. Quadratic; used to validate build_cartesian_tree.
  template <Element T>
  [[nodiscard]] CartesianTree build_cartesian_tree_recursive(Sequence<T> s);

  /// Shape equality. Trees of different windows are compared by structure
  /// only, never by value or absolute position.
  [[nodiscard]] bool trees_equal(const CartesianTree& a, const CartesianTree& b) noexcept;

  /// In-order traversal yields 1..n, and every node precedes its children.
  template <Element T>
  [[nodiscard]] bool satisfies_invariants(const CartesianTree& tree, Sequence<T> s);

  /// Every i with CT(T[i..i+m-1]) = CT(P), by building the tree of every
  /// window. Throws std::invalid_argument on an empty pattern.
  template <Element T>
  [[nodiscard]] MatchSet naive_match(Sequence<T> text, Sequence<T> pattern);

} // namespace ctm::oracle

#endif // CTM_ORACLE_HPP
