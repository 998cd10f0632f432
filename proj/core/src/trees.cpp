#include "gds/trees.hpp"

#include <algorithm>
#include <set>

#include "gds/error.hpp"

namespace gds {

RootedTree::RootedTree(NodeId root) : root_(std::move(root)) {
  nodes_.emplace(root_, Node{});
  insertion_.push_back(root_);
}

void RootedTree::add_child(const NodeId& parent, const NodeId& child) {
  auto it = nodes_.find(parent);
  if (it == nodes_.end()) throw Error(ErrorCode::kUnknownNode, "no node '" + parent + "'");
  if (nodes_.count(child)) throw Error(ErrorCode::kInvalidTree, "duplicate node id '" + child + "'");
  const int lvl = it->second.level + 1;
  it->second.children.push_back(child);
  nodes_.emplace(child, Node{parent, {}, lvl});
  insertion_.push_back(child);
}

const RootedTree::Node& RootedTree::node(const NodeId& e) const {
  auto it = nodes_.find(e);
  if (it == nodes_.end()) throw Error(ErrorCode::kUnknownNode, "no node '" + e + "'");
  return it->second;
}

const std::optional<NodeId>& RootedTree::parent(const NodeId& e) const { return node(e).parent; }

const std::vector<NodeId>& RootedTree::children(const NodeId& e) const { return node(e).children; }

int RootedTree::level(const NodeId& e) const { return node(e).level; }

int RootedTree::height() const {
  int h = 0;
  for (const auto& [id, n] : nodes_) h = std::max(h, n.level);
  return h;
}

std::vector<NodeId> RootedTree::nodes() const {
  std::vector<NodeId> out(insertion_);
  std::sort(out.begin(), out.end(), [this](const NodeId& a, const NodeId& b) {
    const int la = level(a);
    const int lb = level(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<NodeId> RootedTree::leaves() const {
  std::vector<NodeId> out;
  for (const auto& e : nodes()) {
    if (is_leaf(e)) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> RootedTree::parents_set() const {
  std::vector<NodeId> out;
  for (const auto& e : nodes()) {
    if (!is_leaf(e)) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> RootedTree::ancestors(const NodeId& e) const {
  std::vector<NodeId> out;
  for (auto p = parent(e); p; p = parent(*p)) out.push_back(*p);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<NodeId> RootedTree::path(const NodeId& e) const {
  std::vector<NodeId> out = ancestors(e);
  out.push_back(e);
  return out;
}

bool RootedTree::is_ancestor(const NodeId& a, const NodeId& e) const {
  node(a);
  for (auto p = parent(e); p; p = parent(*p)) {
    if (*p == a) return true;
  }
  return false;
}

NodeId RootedTree::first_common_ancestor(const NodeId& g, const NodeId& g2) const {
  const auto pa = path(g);
  const auto pb = path(g2);
  std::size_t i = 0;
  while (i + 1 < pa.size() && i + 1 < pb.size() && pa[i + 1] == pb[i + 1]) ++i;
  return pa[i];
}

NodeId RootedTree::child_on_path(const NodeId& a, const NodeId& e) const {
  if (!is_ancestor(a, e)) {
    throw Error(ErrorCode::kNotAnAncestor, "'" + a + "' is not an ancestor of '" + e + "'");
  }
  const auto p = path(e);
  return p[static_cast<std::size_t>(level(a)) + 1];
}

std::vector<NodeId> RootedTree::leaves_below(const NodeId& e) const {
  std::vector<NodeId> out;
  for (const auto& f : leaves()) {
    if (f == e || is_ancestor(e, f)) out.push_back(f);
  }
  return out;
}

int RootedTree::ambient_dimension() const {
  // d(Γ) = Σ_i Card(N_{i-1} \ Leaves), counted level by level.
  std::map<int, int> internal_at_level;
  for (const auto& [id, n] : nodes_) {
    if (!n.children.empty()) ++internal_at_level[n.level];
  }
  int d = 0;
  for (int i = 1; i <= height(); ++i) d += internal_at_level[i - 1];
  return d;
}

bool RootedTree::is_comb() const {
  for (const auto& [id, n] : nodes_) {
    int internal = 0;
    for (const auto& c : n.children) internal += is_leaf(c) ? 0 : 1;
    if (internal > 1) return false;
  }
  return true;
}

bool RootedTree::leaves_same_level() const {
  std::set<int> levels;
  for (const auto& f : leaves()) levels.insert(level(f));
  return levels.size() <= 1;
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  if (a.root_ != b.root_ || a.nodes_.size() != b.nodes_.size()) return false;
  for (const auto& [id, n] : a.nodes_) {
    auto it = b.nodes_.find(id);
    if (it == b.nodes_.end()) return false;
    if (it->second.parent != n.parent || it->second.children != n.children) return false;
  }
  return true;
}

const Rat& LabelledTree::label(const NodeId& e) const {
  auto it = labels.find(e);
  if (it == labels.end()) throw Error(ErrorCode::kUnknownNode, "no label on '" + e + "'");
  return it->second;
}

const Rat& WeightedTree::weight(const NodeId& child) const {
  auto it = weights.find(child);
  if (it == weights.end()) throw Error(ErrorCode::kUnknownNode, "no weight on edge into '" + child + "'");
  return it->second;
}

namespace {

bool siblings_distinct(const RootedTree& t, const std::map<NodeId, Rat>& deco) {
  for (const auto& e : t.parents_set()) {
    std::set<Rat> seen;
    for (const auto& c : t.children(e)) {
      auto it = deco.find(c);
      if (it == deco.end()) return false;
      if (!seen.insert(it->second).second) return false;
    }
  }
  return true;
}

}  // namespace

bool is_fine(const LabelledTree& lt) { return siblings_distinct(lt.tree, lt.labels); }

bool is_valid_weighting(const WeightedTree& wt) { return siblings_distinct(wt.tree, wt.weights); }

void require_complete(const RootedTree& t, const std::map<NodeId, Rat>& decoration) {
  for (const auto& e : t.nodes()) {
    if (e == t.root()) continue;
    if (!decoration.count(e)) throw Error(ErrorCode::kInvalidTree, "node '" + e + "' is undecorated");
  }
}

VarId node_var(const RootedTree& t, const NodeId& e) { return VarId::node(e, t.level(e)); }

VarId parent_var(const RootedTree& t, const NodeId& e) {
  const auto& p = t.parent(e);
  return p ? node_var(t, *p) : VarId::x0();
}

VarResolver tree_resolver(const RootedTree& t) {
  return [&t](std::string_view ident) -> VarId {
    if (ident == "h") return VarId::h();
    if (ident == "X_0") return VarId::x0();
    if (ident == "T") return VarId::t();
    if (ident == "W") return VarId::w();
    if (ident.substr(0, 2) == "X_") {
      const NodeId id(ident.substr(2));
      if (t.contains(id)) return node_var(t, id);
    }
    throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(ident) + "'");
  };
}

}  // namespace gds
