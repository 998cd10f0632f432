#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gds/poly.hpp"
#include "gds/report.hpp"
#include "gds/trees.hpp"

namespace gds {

/// One generator of I_g, kept with a factored two-sided form for display:
/// poly == ∏ lhs − ∏ rhs.
struct Generator {
  std::string name;  // D0_<e> or D_<e'>_<e>
  Poly poly;
  std::vector<Poly> lhs;
  std::vector<Poly> rhs;
};

struct Presentation {
  LabelledTree lt;
  std::vector<VarId> variables;                         // h, X_0, X_e by (level, id)
  std::map<NodeId, Poly> gens0;                         // Δ_{0,e}
  std::map<std::pair<NodeId, NodeId>, Poly> gensA;      // (e', e) -> Δ_{e',e}

  const RootedTree& tree() const { return lt.tree; }
  /// Δ_{0,e} by (level, id) of e, then Δ_{e',e} by e and then e'.
  std::vector<Generator> generators() const;
};

/// S_e^J. Throws kNotAParent if e is a leaf.
Poly sibling_poly(const LabelledTree& lt, const NodeId& e, const std::set<NodeId>& j = {});
/// R_e.
Poly root_poly(const LabelledTree& lt, const NodeId& e);
/// Q_e = S_e R_e.
Poly q_poly(const LabelledTree& lt, const NodeId& e);
/// Factors of Q_e: S_{Par(a)}^{{a}} for path nodes a deeper than
/// `from_level`, then S_e. Constant factors are dropped. With from_level = 0
/// the product is Q_e; with the level of e'' it is Q_{e',e}.
std::vector<Poly> q_factors(const LabelledTree& lt, const NodeId& e, int from_level = 0);
/// Q_{e',e} = Q_e / R_{e''}. With no e' (the virtual parent of the root)
/// e'' is the root and the result is Q_e.
Poly q_rel(const LabelledTree& lt, const std::optional<NodeId>& ancestor, const NodeId& e);

/// Throws kNotFine.
Presentation build_presentation(const LabelledTree& lt);

/// Columns of M(g): M_0 = (h, 1) and M_e = (Q_e, X_e).
std::pair<Poly, Poly> matrix_column(const Presentation& p, const std::optional<NodeId>& e);
Poly column_det(const std::pair<Poly, Poly>& a, const std::pair<Poly, Poly>& b);

/// h Δ_{e',e} = (X_{Par(e')} − lb(e'')) Δ_{0,e} − Q_{e',e} Δ_{0,e'} for every pair.
CheckReport syzygy_check(const Presentation& p);
/// Generators agree with the minors of M(g) divided by R_{e''}.
CheckReport minor_check(const Presentation& p);

struct MinorCertificate {
  NodeId meet;      // first common ancestor e
  Poly divisor;     // R_e S_e^{{e1,e2}}
  Poly minor;       // Δ_{g1,g2}
  Poly q1;          // Q_{e,g1}
  Poly q2;          // Q_{e,g2}
  bool verified = false;  // minor == q1 Δ_{e,g2} − q2 Δ_{e,g1}
};

/// Throws kComparable when one node lies below the other.
MinorCertificate incomparable_minor(const Presentation& p, const NodeId& g1, const NodeId& g2);

/// All incomparable pairs in P(Γ), certificates checked.
CheckReport incomparable_check(const Presentation& p);

}  // namespace gds
