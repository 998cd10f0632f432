#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gds/dsl.hpp"

namespace gds {

struct CorpusEntry {
  std::string file;   // e.g. "bml.tree"
  std::string text;   // document source
  bool valid;         // whether parse_tree accepts the text
};

/// The worked examples, compiled into the library.
const std::vector<CorpusEntry>& embedded_corpus();

/// Looks up an embedded document by file name (with or without ".tree").
/// Throws kInvalidArgument when absent.
const CorpusEntry& corpus_entry(const std::string& name);

struct RandomTreeOptions {
  int max_height = 4;
  int max_nodes = 15;
  int max_children = 3;
  // Shapes whose leaf charts would exceed this T-degree are redrawn.
  int max_chart_degree = 24;
};

/// Upper bound on the T-degree of any chart variable over the leaves of t.
int chart_degree_bound(const RootedTree& t);

/// Seeded random trees with small rational decorations that are distinct
/// among siblings. Draws use raw engine output only, so sequences are the
/// same on every platform.
class TreeGenerator {
 public:
  explicit TreeGenerator(std::uint64_t seed, RandomTreeOptions options = {});

  RootedTree shape();
  LabelledTree labelled();
  WeightedTree weighted();

 private:
  std::uint64_t draw(std::uint64_t n) { return rng_() % n; }
  RootedTree draw_shape();
  std::map<NodeId, Rat> decorate(const RootedTree& t);

  std::mt19937_64 rng_;
  RandomTreeOptions options_;
};

}  // namespace gds
