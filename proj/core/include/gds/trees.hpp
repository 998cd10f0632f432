#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gds/poly.hpp"
#include "gds/rational.hpp"

namespace gds {

using NodeId = std::string;

/// Finite rooted tree with string node ids. Children keep insertion order;
/// every query that returns a node list sorts it by (level, id).
class RootedTree {
 public:
  explicit RootedTree(NodeId root = "e0");

  /// Throws Error(kUnknownNode) for a missing parent, kInvalidTree for a
  /// duplicate id.
  void add_child(const NodeId& parent, const NodeId& child);

  const NodeId& root() const { return root_; }
  bool contains(const NodeId& e) const { return nodes_.count(e) != 0; }
  std::size_t size() const { return nodes_.size(); }

  /// std::nullopt at the root.
  const std::optional<NodeId>& parent(const NodeId& e) const;
  const std::vector<NodeId>& children(const NodeId& e) const;
  bool is_leaf(const NodeId& e) const { return children(e).empty(); }

  int level(const NodeId& e) const;
  int height() const;

  /// All nodes sorted by (level, id).
  std::vector<NodeId> nodes() const;
  std::vector<NodeId> leaves() const;
  /// P(Γ): the nodes that have at least one child.
  std::vector<NodeId> parents_set() const;
  /// Strict ancestors, root first, ending at Par(e). Empty for the root.
  std::vector<NodeId> ancestors(const NodeId& e) const;
  /// Root to e inclusive.
  std::vector<NodeId> path(const NodeId& e) const;
  bool is_ancestor(const NodeId& a, const NodeId& e) const;  // strict
  /// Greatest common element of the two root paths.
  NodeId first_common_ancestor(const NodeId& g, const NodeId& g2) const;
  /// Child(a) ∩ (↓e); throws kNotAnAncestor unless a is a strict ancestor.
  NodeId child_on_path(const NodeId& a, const NodeId& e) const;
  /// Leaves of the subtree rooted at e (e itself if it is a leaf).
  std::vector<NodeId> leaves_below(const NodeId& e) const;

  int ambient_dimension() const;
  bool is_comb() const;
  bool leaves_same_level() const;

  /// Same ids, same parent relation, same child order.
  friend bool operator==(const RootedTree& a, const RootedTree& b);

 private:
  struct Node {
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    int level = 0;
  };
  const Node& node(const NodeId& e) const;

  NodeId root_;
  std::map<NodeId, Node> nodes_;
  std::vector<NodeId> insertion_;
};

/// Labels on non-root nodes.
struct LabelledTree {
  RootedTree tree;
  std::map<NodeId, Rat> labels;

  const Rat& label(const NodeId& e) const;
  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

/// Edge weights, stored on the child endpoint of each edge.
struct WeightedTree {
  RootedTree tree;
  std::map<NodeId, Rat> weights;

  const Rat& weight(const NodeId& child) const;
  friend bool operator==(const WeightedTree&, const WeightedTree&) = default;
};

bool is_fine(const LabelledTree& lt);
bool is_valid_weighting(const WeightedTree& wt);

/// Checks that every non-root node is decorated; throws kInvalidTree.
void require_complete(const RootedTree& t, const std::map<NodeId, Rat>& decoration);

/// X_e for a node of t.
VarId node_var(const RootedTree& t, const NodeId& e);
/// X_{Par(e)}, with the convention X_{Par(root)} = X_0.
VarId parent_var(const RootedTree& t, const NodeId& e);

/// Resolves h, X_0, T, W and X_<id> for the nodes of t; other identifiers
/// raise Error(kUnknownVariable).
VarResolver tree_resolver(const RootedTree& t);

}  // namespace gds
