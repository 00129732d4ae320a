// SPDX-License-Identifier: Apache-2.0

#include <ctm/oracle.hpp>

#include <stdexcept>
#include <utility>

namespace ctm::oracle {

namespace {

  template <Element T>
  std::optional<std::size_t> build_range(
    CartesianTree& tree, Sequence<T> s, std::size_t lo, std::size_t hi)
  {
    if (lo >= hi) {
      return std::nullopt;
    }
    std::size_t min = lo;
    for (std::size_t k = lo + 1; k < hi; ++k) {
      if (strictly_precedes(s[k], k, s[min], min)) {
        min = k;
      }
    }
    const std::size_t id = tree.nodes.size();
    tree.nodes.push_back({min + 1, std::nullopt, std::nullopt});
    auto left = build_range(tree, s, lo, min);
    auto right = build_range(tree, s, min + 1, hi);
    tree.nodes[id].left = left;
    tree.nodes[id].right = right;
    return id;
  }

  void dump(const CartesianTree& tree, std::optional<std::size_t> node, std::string& out)
  {
    if (!node) {
      out += '.';
      return;
    }
    const auto& n = tree.nodes[*node];
    out += '(';
    dump(tree, n.left, out);
    out += std::to_string(n.position);
    dump(tree, n.right, out);
    out += ')';
  }

} // namespace

std::string CartesianTree::to_string() const
{
  std::string out;
  dump(*this, root, out);
  return out;
}

template <Element T>
CartesianTree build_cartesian_tree(Sequence<T> s)
{
  CartesianTree tree;
  tree.nodes.resize(s.size());
  std::vector<std::size_t> stack;
  stack.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    tree.nodes[i].position = i + 1;
    std::optional<std::size_t> last;
    while (!stack.empty() && !strictly_precedes(s[stack.back()], stack.back(), s[i], i)) {
      last = stack.back();
      stack.pop_back();
    }
    tree.nodes[i].left = last;
    if (!stack.empty()) {
      tree.nodes[stack.back()].right = i;
    }
    stack.push_back(i);
  }
  if (!stack.empty()) {
    tree.root = stack.front();
  }
  return tree;
}

template <Element T>
CartesianTree build_cartesian_tree_recursive(Sequence<T> s)
{
  CartesianTree tree;
  tree.nodes.reserve(s.size());
  tree.root = build_range(tree, s, 0, s.size());
  return tree;
}

bool trees_equal(const CartesianTree& a, const CartesianTree& b) noexcept
{
  if (a.size() != b.size() || a.root.has_value() != b.root.has_value()) {
    return false;
  }
  if (!a.root) {
    return true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pending{{*a.root, *b.root}};
  while (!pending.empty()) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    const auto& nx = a.nodes[x];
    const auto& ny = b.nodes[y];
    if (nx.left.has_value() != ny.left.has_value() || nx.right.has_value() != ny.right.has_value()) {
      return false;
    }
    if (nx.left) {
      pending.emplace_back(*nx.left, *ny.left);
    }
    if (nx.right) {
      pending.emplace_back(*nx.right, *ny.right);
    }
  }
  return true;
}

template <Element T>
bool satisfies_invariants(const CartesianTree& tree, Sequence<T> s)
{
  if (tree.size() != s.size() || tree.empty() != s.empty()) {
    return false;
  }
  if (tree.empty()) {
    return true;
  }
  // Iterative in-order walk; recursion depth would be O(n) on sorted input.
  std::vector<std::size_t> stack;
  std::optional<std::size_t> node = tree.root;
  Position expected = 1;
  std::size_t visited = 0;
  while (node || !stack.empty()) {
    while (node) {
      stack.push_back(*node);
      node = tree.nodes[*node].left;
    }
    const std::size_t id = stack.back();
    stack.pop_back();
    const auto& n = tree.nodes[id];
    if (n.position != expected++) {
      return false;
    }
    ++visited;
    for (const auto child : {n.left, n.right}) {
      if (child) {
        const Position c = tree.nodes[*child].position;
        if (!strictly_precedes(s[n.position - 1], n.position, s[c - 1], c)) {
          return false;
        }
      }
    }
    node = n.right;
  }
  return visited == s.size();
}

template <Element T>
MatchSet naive_match(Sequence<T> text, Sequence<T> pattern)
{
  if (pattern.empty()) {
    throw std::invalid_argument("pattern must be non-empty");
  }
  MatchSet matches;
  if (pattern.size() > text.size()) {
    return matches;
  }
  const auto target = build_cartesian_tree(pattern);
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (trees_equal(build_cartesian_tree(text.subspan(i, pattern.size())), target)) {
      matches.push_back(i + 1);
    }
  }
  return matches;
}

#define CTM_INSTANTIATE(T)                                                         \
  template CartesianTree build_cartesian_tree<T>(Sequence<T>);                     \
  template CartesianTree build_cartesian_tree_recursive<T>(Sequence<T>);           \
  template bool satisfies_invariants<T>(const CartesianTree&, Sequence<T>);        \
  template MatchSet naive_match<T>(Sequence<T>, Sequence<T>);

CTM_INSTANTIATE(std::int64_t)
CTM_INSTANTIATE(std::uint8_t)

#undef CTM_INSTANTIATE

} // namespace ctm::oracle
