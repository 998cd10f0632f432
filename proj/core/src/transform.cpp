#include "gds/transform.hpp"

#include <algorithm>

#include "gds/error.hpp"
#include "gds/presentation.hpp"

namespace gds {

namespace {

const Poly& h_poly() {
  static const Poly h = Poly::var(VarId::h());
  return h;
}

Poly divide_by_h(const Poly& p, const NodeId& e, const NodeId& leaf) {
  auto q = try_divide_exact(p, h_poly());
  if (!q) {
    throw Error(ErrorCode::kNotDivisible,
                "Q_" + e + " on the chart of '" + leaf + "' is not divisible by h");
  }
  return *std::move(q);
}

NodeId smallest_leaf_below(const RootedTree& t, const NodeId& e) {
  const auto ls = t.leaves_below(e);
  return *std::min_element(ls.begin(), ls.end());
}

Poly chart_x0(const WeightedTree& wt, const NodeId& f) {
  return sigma(wt, f) + Poly::var(VarId::h(), static_cast<std::uint32_t>(wt.tree.level(f))) *
                            Poly::var(VarId::t());
}

}  // namespace

Poly sigma(const WeightedTree& wt, const NodeId& f) {
  if (!wt.tree.is_leaf(f)) throw Error(ErrorCode::kNotALeaf, "'" + f + "' is not a leaf");
  const auto path = wt.tree.path(f);
  Poly out;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    out += Poly::term(wt.weight(path[j + 1]), Monomial::of(VarId::h(), static_cast<std::uint32_t>(j)));
  }
  return out;
}

std::pair<Rat, Rat> taylor_pair(const LabelledTree& lt, const WeightedTree& wt, const NodeId& node,
                                const NodeId& leaf) {
  const RootedTree& t = lt.tree;
  const int lvl = t.level(node);
  const auto path = t.path(leaf);
  if (lvl < 2 || static_cast<int>(path.size()) <= lvl || path[static_cast<std::size_t>(lvl)] != node) {
    throw Error(ErrorCode::kInvalidArgument, "'" + leaf + "' is not a leaf below '" + node + "'");
  }
  const auto n = static_cast<std::uint32_t>(lvl - 2);
  Poly x0 = Poly::term(Rat(1), Monomial::of(VarId::w()) * Monomial::of(VarId::h(), n + 1)) +
            Poly::term(Rat(1), Monomial::of(VarId::t()) * Monomial::of(VarId::h(), n + 2));
  for (std::uint32_t j = 0; j <= n; ++j) {
    x0 += Poly::term(wt.weight(path[j + 1]), Monomial::of(VarId::h(), j));
  }
  Substitution s{{VarId::x0(), x0}};
  for (std::uint32_t k = 0; k <= n; ++k) {
    const NodeId& e = path[k];
    s[node_var(t, e)] = divide_by_h(substitute_product(q_factors(lt, e), s), e, leaf);
  }
  const Poly v = at_h_zero(s.at(node_var(t, path[n])));
  const Rat lambda = v.coefficient(Monomial::of(VarId::w()));
  const Rat mu = v.constant_term();
  if (lambda.is_zero() || v != Poly::term(lambda, Monomial::of(VarId::w())) + Poly(mu)) {
    throw Error(ErrorCode::kNonlinearInW, "chart value for '" + node + "' is " + v.to_string() +
                                              ", not an affine function of W");
  }
  return {lambda, mu};
}

LabelledConversion weighted_to_labelled(const WeightedTree& wt) {
  const RootedTree& t = wt.tree;
  require_complete(t, wt.weights);
  if (!is_valid_weighting(wt)) throw Error(ErrorCode::kInvalidWeighting, "sibling edges share a weight");

  LabelledConversion out;
  out.lt.tree = t;
  LabelledTree& lt = out.lt;
  std::map<NodeId, TraceStep> steps;
  for (const auto& c : t.children(t.root())) {
    lt.labels[c] = wt.weight(c);
    steps[c] = TraceStep{c, smallest_leaf_below(t, c), Rat(1), Rat(0), wt.weight(c), wt.weight(c)};
  }

  std::map<NodeId, Substitution> chart;
  for (const auto& f : t.leaves()) chart[f][VarId::x0()] = chart_x0(wt, f);

  const auto internal = t.parents_set();
  for (int k = 0; k < t.height(); ++k) {
    for (const auto& e : internal) {
      if (t.level(e) != k) continue;
      const auto q = q_factors(lt, e);
      for (auto& [f, s] : chart) s[node_var(t, e)] = divide_by_h(substitute_product(q, s), e, f);
    }
    for (const auto& e : internal) {
      if (t.level(e) != k) continue;
      const VarId xe = node_var(t, e);
      for (const auto& g : t.children(e)) {
        if (t.is_leaf(g)) {
          const Poly v = at_h_zero(chart.at(g).at(xe));
          if (v.degree_in(VarId::t()) != 1) {
            throw Error(ErrorCode::kLeadingCoefficientZero,
                        "X_" + e + " restricted to the component of '" + g + "' is " + v.to_string());
          }
          continue;
        }
        for (const auto& g2 : t.children(g)) {
          const NodeId f0 = smallest_leaf_below(t, g2);
          const Poly v = at_h_zero(chart.at(f0).at(xe));
          if (!v.is_constant()) {
            throw Error(ErrorCode::kNonConstantOnComponent,
                        "X_" + e + " is not constant on the component of '" + f0 + "'");
          }
          for (const auto& f : t.leaves_below(g2)) {
            if (at_h_zero(chart.at(f).at(xe)) != v) {
              throw Error(ErrorCode::kNonConstantOnComponent,
                          "leaves '" + f0 + "' and '" + f + "' disagree on the label of '" + g2 + "'");
            }
          }
          const Rat label = v.constant_term();
          lt.labels[g2] = label;
          const auto [lambda, mu] = taylor_pair(lt, wt, g2, f0);
          if (lambda * wt.weight(g2) + mu != label) {
            throw Error(ErrorCode::kInvalidArgument,
                        "Taylor form disagrees with the chart label of '" + g2 + "'");
          }
          steps[g2] = TraceStep{g2, f0, lambda, mu, label, wt.weight(g2)};
        }
      }
    }
  }

  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "constructed labelling is not fine");
  for (const auto& f : t.leaves()) out.charts.push_back(ChartExpansion{f, chart.at(f)});
  for (const auto& e : t.nodes()) {
    if (steps.count(e)) out.trace.steps.push_back(steps.at(e));
  }
  return out;
}

WeightedConversion labelled_to_weighted(const LabelledTree& lt) {
  const RootedTree& t = lt.tree;
  require_complete(t, lt.labels);
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");

  WeightedConversion out;
  out.wt.tree = t;
  for (const auto& g : t.nodes()) {
    if (g == t.root()) continue;
    const NodeId f = smallest_leaf_below(t, g);
    const Rat& label = lt.label(g);
    if (t.level(g) == 1) {
      out.wt.weights[g] = label;
      out.trace.steps.push_back(TraceStep{g, f, Rat(1), Rat(0), label, label});
      continue;
    }
    const auto [lambda, mu] = taylor_pair(lt, out.wt, g, f);
    const Rat w = (label - mu) / lambda;
    out.wt.weights[g] = w;
    out.trace.steps.push_back(TraceStep{g, f, lambda, mu, label, w});
  }
  if (!is_valid_weighting(out.wt)) {
    throw Error(ErrorCode::kInvalidWeighting, "recovered weights clash between siblings");
  }
  return out;
}

}  // namespace gds
