#include "gds/charts.hpp"

#include <algorithm>

#include "gds/error.hpp"
#include "gds/transform.hpp"

namespace gds {

Poly at_h_zero(const Poly& p) { return p.coefficient_in(VarId::h(), 0); }

LaurentExpr LaurentExpr::normalized(Poly numerator, std::uint32_t h_power) {
  if (numerator.is_zero()) return LaurentExpr{};
  const std::uint32_t d = std::min(*order_in(numerator, {VarId::h()}), h_power);
  return LaurentExpr{divide_by_var_power(numerator, VarId::h(), d), h_power - d};
}

LaurentExpr evaluate_laurent(const Poly& p, const std::map<VarId, LaurentExpr>& images) {
  // Carry h^{-1} as an auxiliary symbol, then clear it.
  const VarId inv = VarId::sym("h_inv");
  Substitution s;
  for (const auto& [v, l] : images) s[v] = l.numerator * Poly::var(inv, l.h_power);
  const Poly r = substitute(p, s);
  const std::uint32_t depth = r.degree_in(inv);
  Poly num;
  for (const auto& [m, c] : r.terms()) {
    num.add_term(m.without(inv) * Monomial::of(VarId::h(), depth - m.degree(inv)), c);
  }
  return LaurentExpr::normalized(std::move(num), depth);
}

namespace {

LaurentExpr evaluate_laurent_product(const std::vector<Poly>& factors,
                                     const std::map<VarId, LaurentExpr>& images) {
  Poly num(1);
  std::uint32_t k = 0;
  for (const auto& f : factors) {
    const LaurentExpr v = evaluate_laurent(f, images);
    num = num * v.numerator;
    k += v.h_power;
  }
  return LaurentExpr::normalized(std::move(num), k);
}

}  // namespace

std::map<VarId, LaurentExpr> generic_trivialization(const Presentation& p) {
  std::map<VarId, LaurentExpr> images;
  for (const auto& e : p.tree().parents_set()) {
    const LaurentExpr q = evaluate_laurent_product(q_factors(p.lt, e), images);
    images[node_var(p.tree(), e)] = LaurentExpr::normalized(q.numerator, q.h_power + 1);
  }
  return images;
}

CheckReport verify_generic_trivialization(const Presentation& p) {
  CheckReport r{"generic-trivialization", 0, {}};
  const auto images = generic_trivialization(p);
  for (const auto& g : p.generators()) {
    const LaurentExpr l = evaluate_laurent_product(g.lhs, images);
    const LaurentExpr rr = evaluate_laurent_product(g.rhs, images);
    r.expect(l == rr,
             g.name + " does not vanish over h != 0");
  }
  return r;
}

std::vector<ChartExpansion> charts_for(const WeightedTree& wt) { return weighted_to_labelled(wt).charts; }

std::vector<ChartExpansion> charts_for_labelled(const LabelledTree& lt) {
  const auto back = weighted_to_labelled(labelled_to_weighted(lt).wt);
  if (back.lt.labels != lt.labels) {
    throw Error(ErrorCode::kInvalidArgument, "recovered weights do not reproduce the labelling");
  }
  return back.charts;
}

CheckReport verify_embedding(const Presentation& p, const std::vector<ChartExpansion>& charts) {
  CheckReport r{"embedding", 0, {}};
  const auto gens = p.generators();
  // Factors repeat heavily across generators; substitute each distinct one once per chart.
  std::vector<Poly> distinct;
  auto index_of = [&](const Poly& f) {
    const auto it = std::find(distinct.begin(), distinct.end(), f);
    if (it != distinct.end()) return static_cast<std::size_t>(it - distinct.begin());
    distinct.push_back(f);
    return distinct.size() - 1;
  };
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> sides;
  for (const auto& g : gens) {
    auto& [l, rr] = sides.emplace_back();
    for (const auto& f : g.lhs) l.push_back(index_of(f));
    for (const auto& f : g.rhs) rr.push_back(index_of(f));
  }
  for (const auto& c : charts) {
    std::vector<Poly> images;
    images.reserve(distinct.size());
    for (const auto& f : distinct) images.push_back(substitute(f, c.expansion));
    auto product = [&](const std::vector<std::size_t>& idx) {
      Poly out(1);
      for (const auto i : idx) out = out * images[i];
      return out;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
      r.expect(product(sides[i].first) == product(sides[i].second),
               gens[i].name + " does not vanish on the chart of '" + c.leaf + "'");
    }
  }
  return r;
}

CheckReport chart_shape_check(const WeightedTree& wt, const std::vector<ChartExpansion>& charts) {
  CheckReport r{"chart-shape", 0, {}};
  const RootedTree& t = wt.tree;
  const auto leaves = t.leaves();
  r.expect(charts.size() == leaves.size(), "chart count differs from leaf count");
  for (std::size_t i = 0; i < charts.size() && i < leaves.size(); ++i) {
    const auto& f = leaves[i];
    const auto n = static_cast<std::uint32_t>(t.level(f));
    const auto it = charts[i].expansion.find(VarId::x0());
    const bool ok = charts[i].leaf == f && it != charts[i].expansion.end() &&
                    it->second == sigma(wt, f) + Poly::var(VarId::h(), n) * Poly::var(VarId::t()) &&
                    it->second.degree_in(VarId::h()) == n && it->second.degree_in(VarId::t()) == 1;
    r.expect(ok, "X_0 on the chart of '" + f + "' is not sigma + h^n T");
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const auto ord = order_in(sigma(wt, leaves[i]) - sigma(wt, leaves[j]), {VarId::h()});
      const int meet = t.level(t.first_common_ancestor(leaves[i], leaves[j]));
      r.expect(ord && static_cast<int>(*ord) == meet,
               "ord_h(sigma_" + leaves[i] + " - sigma_" + leaves[j] + ") differs from the meet level");
    }
  }
  return r;
}

std::vector<FiberComponent> fiber_components(const Presentation& p,
                                             const std::vector<ChartExpansion>& charts) {
  const RootedTree& t = p.tree();
  std::vector<FiberComponent> out;
  for (const auto& c : charts) {
    const NodeId& f = c.leaf;
    FiberComponent comp{f, parent_var(t, f), {}, {}};
    comp.point_map[VarId::h()] = Poly();
    for (const auto& [v, poly] : c.expansion) comp.point_map[v] = at_h_zero(poly);
    comp.ideal_relations.push_back(Poly::var(VarId::h()));
    const auto path = t.path(f);
    const int n = t.level(f);
    for (int k = 1; k <= n; ++k) {
      const VarId v = k + 1 <= n ? node_var(t, path[static_cast<std::size_t>(n - k - 1)]) : VarId::x0();
      comp.ideal_relations.push_back(Poly::linear(v, p.lt.label(path[static_cast<std::size_t>(n - k + 1)])));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<FiberComponent> fiber_components(const Presentation& p) {
  return fiber_components(p, charts_for_labelled(p.lt));
}

CheckReport fiber_check(const Presentation& p, const std::vector<FiberComponent>& comps) {
  CheckReport r{"fiber", 0, {}};
  const RootedTree& t = p.tree();
  r.expect(comps.size() == t.leaves().size(), "component count differs from leaf count");
  const auto gens = p.generators();
  for (const auto& c : comps) {
    for (const auto& g : gens) {
      r.expect(substitute(g.poly, c.point_map).is_zero(),
               g.name + " does not vanish on the component of '" + c.leaf + "'");
    }
    for (const auto& rel : c.ideal_relations) {
      r.expect(substitute(rel, c.point_map).is_zero(),
               "relation " + rel.to_string() + " fails on the component of '" + c.leaf + "'");
    }
    const auto it = c.point_map.find(c.coordinate);
    r.expect(it != c.point_map.end() && it->second.degree_in(VarId::t()) == 1,
             "coordinate of the component of '" + c.leaf + "' is not linear in T");
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const auto& a = comps[i];
      const auto& b = comps[j];
      const VarId v = parent_var(t, t.first_common_ancestor(a.leaf, b.leaf));
      const Poly& va = a.point_map.at(v);
      const Poly& vb = b.point_map.at(v);
      r.expect(va.is_constant() && vb.is_constant() && va != vb,
               "components of '" + a.leaf + "' and '" + b.leaf + "' are not separated by " + v.to_string());
    }
  }
  return r;
}

CheckReport leaf_cover_check(const Presentation& p, const std::vector<FiberComponent>& comps) {
  CheckReport r{"leaf-cover", 0, {}};
  const RootedTree& t = p.tree();
  if (t.height() == 0) return r;
  for (const auto& f : t.leaves()) {
    const Poly rf = root_poly(p.lt, f);
    for (const auto& c : comps) {
      const Poly v = substitute(rf, c.point_map);
      if (c.leaf == f) {
        r.expect(v.is_constant() && !v.is_zero(), "R_" + f + " vanishes on its own component");
      } else {
        r.expect(v.is_zero(), "R_" + f + " does not vanish on the component of '" + c.leaf + "'");
      }
    }
  }
  return r;
}

CheckReport leaf_cover_check(const Presentation& p) { return leaf_cover_check(p, fiber_components(p)); }

}  // namespace gds
