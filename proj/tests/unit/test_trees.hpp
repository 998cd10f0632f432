#pragma once

#include "gds/dsl.hpp"

namespace gds::testing {

inline LabelledTree bml() {
  return parse_tree("labelled bml (e0 (e11:-1) (e12:1) (e1:0 (e21:-1) (e22:1)))").labelled();
}

inline LabelledTree strange_labelled() {
  return parse_tree("labelled strange (e0 (e1:1 (f1:2)) (e2:-1 (f2:-2)))").labelled();
}

inline WeightedTree strange_weighted() {
  return parse_tree("weighted strange (e0 (e1@1 (f1@1)) (e2@-1 (f2@1)))").weighted();
}

inline LabelledTree trivial_labelled() { return parse_tree("labelled trivial (e0)").labelled(); }

// Resolves X_<id> for the nodes of t.
inline Poly P(const RootedTree& t, std::string_view text) { return parse_poly(text, tree_resolver(t)); }

}  // namespace gds::testing
