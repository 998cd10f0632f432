#include "gds/derivations.hpp"

#include <algorithm>

#include "gds/error.hpp"

namespace gds {

namespace {

const Poly& h_poly() {
  static const Poly h = Poly::var(VarId::h());
  return h;
}

// D-degree of each variable; p's degree is the weighted degree of its terms.
int weighted_degree(const Poly& p, const std::map<VarId, int>& deg) {
  int best = 0;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (const auto& [v, e] : m.factors()) {
      const auto it = deg.find(v);
      if (it != deg.end()) d += it->second * static_cast<int>(e);
    }
    best = std::max(best, d);
  }
  return best;
}

std::map<VarId, int> variable_degrees(const Derivation& d) {
  std::map<VarId, int> deg;
  // Images are triangular, so X_0 first and then by level.
  std::vector<VarId> order;
  for (const auto& [v, img] : d.images) order.push_back(v);
  sort_vars(order);
  for (const auto& v : order) {
    const Poly& img = d.images.at(v);
    deg[v] = img.is_zero() ? 0 : 1 + weighted_degree(img, deg);
  }
  return deg;
}

}  // namespace

Poly Derivation::image(VarId v) const {
  const auto it = images.find(v);
  return it == images.end() ? Poly() : it->second;
}

Derivation build_derivation(const LabelledTree& lt, int m, const Poly& g) {
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");
  const RootedTree& t = lt.tree;
  for (const auto& v : g.variables()) {
    if (v != VarId::h()) throw Error(ErrorCode::kInvalidArgument, "multiplier must be a polynomial in h");
  }
  if (g.constant_term().is_zero()) throw Error(ErrorCode::kHDividesG, "h divides the multiplier " + g.to_string());
  if (m < t.height()) {
    throw Error(ErrorCode::kMTooSmall,
                "m = " + std::to_string(m) + " is below the tree height " + std::to_string(t.height()));
  }
  Derivation d;
  d.m = m;
  d.g = g;
  d.images[VarId::h()] = Poly();
  d.images[VarId::x0()] = g * Poly::var(VarId::h(), static_cast<std::uint32_t>(m));
  for (const auto& e : t.parents_set()) {
    auto q = try_divide_exact(apply(d, q_poly(lt, e)), h_poly());
    if (!q) throw Error(ErrorCode::kMTooSmall, "D(Q_" + e + ") is not divisible by h");
    d.images[node_var(t, e)] = *std::move(q);
  }
  return d;
}

Poly apply(const Derivation& d, const Poly& p) {
  Poly out;
  for (const auto& v : p.variables()) {
    const auto it = d.images.find(v);
    if (it == d.images.end() || it->second.is_zero()) continue;
    out += partial(p, v) * it->second;
  }
  return out;
}

CheckReport verify_kernel(const Derivation& d, const Presentation& p) {
  CheckReport r{"kernel", 0, {}};
  for (const auto& [e, delta] : p.gens0) r.expect(apply(d, delta).is_zero(), "D(D0_" + e + ") != 0");
  return r;
}

StabilityCertificate stability_certificate(const Derivation& d, const Presentation& p,
                                           const NodeId& ancestor, const NodeId& e) {
  const RootedTree& t = p.tree();
  const auto it = p.gensA.find({ancestor, e});
  if (it == p.gensA.end()) {
    throw Error(ErrorCode::kNotAnAncestor, "'" + ancestor + "' is not an internal ancestor of '" + e + "'");
  }
  StabilityCertificate c{ancestor, e, {}, {}, false};
  auto c1 = try_divide_exact(d.image(parent_var(t, ancestor)), h_poly());
  auto c2 = try_divide_exact(apply(d, q_rel(p.lt, ancestor, e)), h_poly());
  if (!c1 || !c2) {
    throw Error(ErrorCode::kNotDivisible, "stability cofactors for (" + ancestor + ", " + e + ") are not divisible by h");
  }
  c.c1 = *std::move(c1);
  c.c2 = -*c2;
  c.verified = apply(d, it->second) == c.c1 * p.gens0.at(e) + c.c2 * p.gens0.at(ancestor);
  return c;
}

CheckReport stability_check(const Derivation& d, const Presentation& p) {
  CheckReport r{"stability", 0, {}};
  for (const auto& [key, delta] : p.gensA) {
    bool ok = false;
    try {
      ok = stability_certificate(d, p, key.first, key.second).verified;
    } catch (const Error&) {
      ok = false;
    }
    r.expect(ok, "certificate fails for (" + key.first + ", " + key.second + ")");
  }
  return r;
}

CheckReport triangularity_check(const Derivation& d, const Presentation& p) {
  CheckReport r{"triangularity", 0, {}};
  const RootedTree& t = p.tree();
  for (const auto& e : t.parents_set()) {
    std::set<VarId> allowed{VarId::h(), VarId::x0()};
    for (const auto& a : t.ancestors(e)) allowed.insert(node_var(t, a));
    bool ok = true;
    for (const auto& v : d.image(node_var(t, e)).variables()) ok = ok && allowed.count(v) > 0;
    r.expect(ok, "D(X_" + e + ") involves a non-ancestor variable");
  }
  return r;
}

CheckReport h_order_check(const Derivation& d, const Presentation& p) {
  CheckReport r{"h-order", 0, {}};
  const RootedTree& t = p.tree();
  for (const auto& e : t.parents_set()) {
    const Poly img = d.image(node_var(t, e));
    const int need = d.m - t.level(e) - 1;
    const auto ord = order_in(img, {VarId::h()});
    r.expect(!ord || static_cast<int>(*ord) >= need,
             "ord_h D(X_" + e + ") is below " + std::to_string(need));
  }
  return r;
}

int nilpotency_bound(const Derivation& d, const Poly& p) {
  if (p.is_zero()) return 0;
  return 1 + weighted_degree(p, variable_degrees(d));
}

int nilpotency_trace(const Derivation& d, const Poly& p, int bound) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "bound must be at least 1");
  Poly cur = p;
  for (int k = 0; k <= bound; ++k) {
    if (cur.is_zero()) return k;
    cur = apply(d, cur);
  }
  throw Error(ErrorCode::kBoundExceeded, "no vanishing within " + std::to_string(bound) + " applications");
}

CheckReport nilpotency_check(const Derivation& d, const Presentation& p) {
  CheckReport r{"nilpotency", 0, {}};
  const auto deg = variable_degrees(d);
  for (const auto& v : p.variables) {
    const Poly x = Poly::var(v);
    const int bound = std::max(1, 1 + weighted_degree(x, deg));
    bool ok = false;
    try {
      ok = nilpotency_trace(d, x, bound) >= 1;
    } catch (const Error&) {
      ok = false;
    }
    r.expect(ok, v.to_string() + " does not vanish within " + std::to_string(bound) + " applications");
  }
  for (const auto& [e, delta] : p.gens0) {
    bool ok = false;
    try {
      ok = nilpotency_trace(d, delta, 1) == 1;
    } catch (const Error&) {
      ok = false;
    }
    r.expect(ok, "D0_" + e + " is not killed by one application");
  }
  return r;
}

int fixed_point_order(const Derivation& d, const FiberComponent& c) {
  Substitution shift;
  std::set<VarId> local{VarId::h()};
  int k = 0;
  for (const auto& rel : c.ideal_relations) {
    const auto vars = rel.variables();
    if (vars.size() != 1 || vars[0] == VarId::h()) continue;
    const VarId u = VarId::sym("u", k++);
    shift[vars[0]] = Poly::var(u) - Poly(rel.constant_term());
    local.insert(u);
  }
  std::optional<std::uint32_t> best;
  for (const auto& [v, img] : d.images) {
    const auto ord = order_in(substitute(img, shift), local);
    if (ord && (!best || *ord < *best)) best = ord;
  }
  return best ? static_cast<int>(*best) : 0;
}

CheckReport fixed_point_check(const Derivation& d, const Presentation& p,
                              const std::vector<FiberComponent>& comps) {
  CheckReport r{"fixed-point-order", 0, {}};
  for (const auto& c : comps) {
    const int want = d.m - p.tree().level(c.leaf);
    const int got = fixed_point_order(d, c);
    r.expect(got == want, "order on the component of '" + c.leaf + "' is " + std::to_string(got) +
                              ", expected " + std::to_string(want));
  }
  return r;
}

std::vector<CheckReport> derivation_suite(const Derivation& d, const Presentation& p,
                                          const std::vector<FiberComponent>& comps) {
  return {verify_kernel(d, p),        stability_check(d, p),    triangularity_check(d, p),
          h_order_check(d, p),        nilpotency_check(d, p),   fixed_point_check(d, p, comps)};
}

}  // namespace gds
