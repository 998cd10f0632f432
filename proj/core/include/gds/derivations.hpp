#pragma once

#include <map>
#include <vector>

#include "gds/charts.hpp"
#include "gds/poly.hpp"
#include "gds/presentation.hpp"
#include "gds/report.hpp"

namespace gds {

/// Triangular derivation g·h^m ∂/∂X_0 + ..., lifted to the X_e by exact
/// division by h.
struct Derivation {
  int m = 0;
  Poly g{1};                     // multiplier in Q[h], not divisible by h
  std::map<VarId, Poly> images;  // h, X_0 and every X_e

  /// Zero for variables without an image.
  Poly image(VarId v) const;
};

/// Throws kMTooSmall when m < height or a division by h fails, kHDividesG
/// when g(0) = 0, kInvalidArgument when g involves more than h, and kNotFine.
Derivation build_derivation(const LabelledTree& lt, int m, const Poly& g = Poly(1));

/// Σ_v ∂p/∂v · D(v).
Poly apply(const Derivation& d, const Poly& p);

/// D(Δ_{0,e}) = 0 for every e.
CheckReport verify_kernel(const Derivation& d, const Presentation& p);

struct StabilityCertificate {
  NodeId ancestor;
  NodeId node;
  Poly c1;  // D(X_{Par(e')}) / h
  Poly c2;  // −D(Q_{e',e}) / h
  bool verified = false;  // D(Δ_{e',e}) == c1 Δ_{0,e} + c2 Δ_{0,e'}
};

/// Throws kNotDivisible when a cofactor is not divisible by h.
StabilityCertificate stability_certificate(const Derivation& d, const Presentation& p,
                                           const NodeId& ancestor, const NodeId& e);
CheckReport stability_check(const Derivation& d, const Presentation& p);

/// Image of X_e only involves h, X_0 and ancestor variables.
CheckReport triangularity_check(const Derivation& d, const Presentation& p);
/// ord_h D(X_e) ≥ m − level(e) − 1.
CheckReport h_order_check(const Derivation& d, const Presentation& p);

/// Upper bound on the number of applications needed to reach zero, from the
/// D-degree of each variable (deg X_0 = 1, deg X_e = 1 + weighted degree of
/// D(X_e)).
int nilpotency_bound(const Derivation& d, const Poly& p);
/// Least k ≤ bound with D^k(p) = 0. Throws kBoundExceeded.
int nilpotency_trace(const Derivation& d, const Poly& p, int bound);
/// Every ambient variable within its bound, and k = 1 on every Δ_{0,e}.
CheckReport nilpotency_check(const Derivation& d, const Presentation& p);

/// Minimal order of the images in h and the shifted coordinates of the
/// component. A lower bound for the fixed point order.
int fixed_point_order(const Derivation& d, const FiberComponent& c);
/// fixed_point_order == m − level(leaf) on every component.
CheckReport fixed_point_check(const Derivation& d, const Presentation& p,
                              const std::vector<FiberComponent>& comps);

/// Kernel, stability, triangularity, h-order, nilpotency and fixed points.
std::vector<CheckReport> derivation_suite(const Derivation& d, const Presentation& p,
                                          const std::vector<FiberComponent>& comps);

}  // namespace gds
