#pragma once

#include <vector>

#include "gds/charts.hpp"
#include "gds/trees.hpp"

namespace gds {

/// σ_f = Σ_j w([e_{f,j}, e_{f,j+1}]) h^j. Throws kNotALeaf.
Poly sigma(const WeightedTree& wt, const NodeId& f);

struct TraceStep {
  NodeId node;
  NodeId leaf;    // leaf used for the chart computation
  Rat lambda;     // label = lambda * weight + mu
  Rat mu;
  Rat label;
  Rat weight;
};

struct ConversionTrace {
  std::vector<TraceStep> steps;  // by (level, id)
};

struct LabelledConversion {
  LabelledTree lt;
  std::vector<ChartExpansion> charts;
  ConversionTrace trace;
};

struct WeightedConversion {
  WeightedTree wt;
  ConversionTrace trace;
};

/// Throws kInvalidWeighting, and kNotDivisible, kNonConstantOnComponent or
/// kLeadingCoefficientZero if the chart recursion breaks down.
LabelledConversion weighted_to_labelled(const WeightedTree& wt);

/// Throws kNotFine or kNonlinearInW.
WeightedConversion labelled_to_weighted(const LabelledTree& lt);

/// (λ, μ) for a node g' at level ≥ 2: the h = 0 value of φ_{Par²(g')} on a
/// chart through `leaf`, as an affine function λW + μ of the weight of g'.
/// Needs labels up to the level of Par(g') and weights on the path above g'.
std::pair<Rat, Rat> taylor_pair(const LabelledTree& lt, const WeightedTree& wt, const NodeId& node,
                                const NodeId& leaf);

}  // namespace gds
