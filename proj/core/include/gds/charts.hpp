#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gds/poly.hpp"
#include "gds/presentation.hpp"
#include "gds/report.hpp"
#include "gds/trees.hpp"

namespace gds {

/// numerator / h^h_power, normalized so that h does not divide a nonzero
/// numerator.
struct LaurentExpr {
  Poly numerator;
  std::uint32_t h_power = 0;

  static LaurentExpr normalized(Poly numerator, std::uint32_t h_power);
  friend bool operator==(const LaurentExpr&, const LaurentExpr&) = default;
};

/// Clears denominators after substituting Laurent images into p.
LaurentExpr evaluate_laurent(const Poly& p, const std::map<VarId, LaurentExpr>& images);

/// X_e ↦ h^{-1} Q_e(X_0, earlier images), in (level, id) order.
std::map<VarId, LaurentExpr> generic_trivialization(const Presentation& p);

/// Every generator evaluates to zero under the generic trivialization.
CheckReport verify_generic_trivialization(const Presentation& p);

/// Chart of one leaf f: X_0 ↦ σ_f + h^{n_f} T and X_e ↦ φ_e, polynomials
/// in h and T.
struct ChartExpansion {
  NodeId leaf;
  std::map<VarId, Poly> expansion;
};

/// One chart per leaf, in leaf order. Throws on a non-exact h-division.
std::vector<ChartExpansion> charts_for(const WeightedTree& wt);

/// Charts of the weighted tree recovered from a fine labelling; throws
/// kInvalidArgument if the recovered labels differ from the input.
std::vector<ChartExpansion> charts_for_labelled(const LabelledTree& lt);

/// Every generator vanishes under every chart.
CheckReport verify_embedding(const Presentation& p, const std::vector<ChartExpansion>& charts);

/// One chart per leaf; X_0 ↦ σ_f + h^{n_f}T exactly; h-order of σ_f − σ_f'
/// equals the level of the first common ancestor.
CheckReport chart_shape_check(const WeightedTree& wt, const std::vector<ChartExpansion>& charts);

/// Irreducible component C_e of the fiber over h = 0.
struct FiberComponent {
  NodeId leaf;
  VarId coordinate;                  // X_{Par(e)}
  std::map<VarId, Poly> point_map;   // ambient variable ↦ polynomial in T, with h ↦ 0
  std::vector<Poly> ideal_relations;
};

std::vector<FiberComponent> fiber_components(const Presentation& p);
std::vector<FiberComponent> fiber_components(const Presentation& p,
                                             const std::vector<ChartExpansion>& charts);

/// Count, annihilation of generators, defining relations, coordinate shape
/// and pairwise separation.
CheckReport fiber_check(const Presentation& p, const std::vector<FiberComponent>& comps);

/// R_f is a nonzero constant on C_f and vanishes on every other component.
CheckReport leaf_cover_check(const Presentation& p);
CheckReport leaf_cover_check(const Presentation& p, const std::vector<FiberComponent>& comps);

/// Value of a polynomial in h at h = 0.
Poly at_h_zero(const Poly& p);

}  // namespace gds
