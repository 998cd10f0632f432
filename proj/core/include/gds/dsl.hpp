#pragma once

#include <map>
#include <string>
#include <string_view>

#include "gds/trees.hpp"

namespace gds {

enum class TreeKind { kLabelled, kWeighted };

/// A parsed tree file.
///
///   labelled strange
///   (e0 (e1:1 (f1:2)) (e2:-1 (f2:-2)))
///
///   weighted strange
///   (e0 (e1@1 (f1@1)) (e2@-1 (f2@1)))
///
/// `;` starts a comment running to the end of the line. Ids match
/// [A-Za-z0-9_]+ and `0` is reserved for X_0.
struct TreeDocument {
  TreeKind kind = TreeKind::kLabelled;
  std::string name;
  RootedTree tree;
  std::map<NodeId, Rat> decoration;  // labels or weights, keyed by node

  LabelledTree labelled() const;
  WeightedTree weighted() const;

  static TreeDocument of(const LabelledTree& lt, std::string name);
  static TreeDocument of(const WeightedTree& wt, std::string name);

  friend bool operator==(const TreeDocument&, const TreeDocument&) = default;
};

/// Throws ParseError with code kParseError for syntax problems and
/// kValidationError for duplicate ids or clashing sibling decorations.
TreeDocument parse_tree(std::string_view text);

/// Canonical single-line form; parse_tree(print_tree(d)) == d.
std::string print_tree(const TreeDocument& doc);

std::string_view to_string(TreeKind kind);

}  // namespace gds
