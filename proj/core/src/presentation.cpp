#include "gds/presentation.hpp"

#include "gds/error.hpp"

namespace gds {

Poly sibling_poly(const LabelledTree& lt, const NodeId& e, const std::set<NodeId>& j) {
  const RootedTree& t = lt.tree;
  if (t.is_leaf(e)) throw Error(ErrorCode::kNotAParent, "'" + e + "' has no children");
  const VarId x = parent_var(t, e);
  Poly out(1);
  for (const auto& c : t.children(e)) {
    if (j.count(c)) continue;
    out = out * Poly::linear(x, lt.label(c));
  }
  return out;
}

Poly root_poly(const LabelledTree& lt, const NodeId& e) {
  const auto& par = lt.tree.parent(e);
  if (!par) return Poly(1);
  return sibling_poly(lt, *par, {e}) * root_poly(lt, *par);
}

Poly q_poly(const LabelledTree& lt, const NodeId& e) { return sibling_poly(lt, e) * root_poly(lt, e); }

Poly q_rel(const LabelledTree& lt, const std::optional<NodeId>& ancestor, const NodeId& e) {
  if (!ancestor) return q_poly(lt, e);
  const NodeId mid = lt.tree.child_on_path(*ancestor, e);
  return divide_exact(q_poly(lt, e), root_poly(lt, mid));
}

std::vector<Poly> q_factors(const LabelledTree& lt, const NodeId& e, int from_level) {
  std::vector<Poly> out;
  for (const auto& a : lt.tree.path(e)) {
    if (lt.tree.level(a) <= from_level) continue;
    Poly s = sibling_poly(lt, *lt.tree.parent(a), {a});
    if (!s.is_constant()) out.push_back(std::move(s));
  }
  out.push_back(sibling_poly(lt, e));
  return out;
}

namespace {

Poly product(const std::vector<Poly>& fs) {
  Poly out(1);
  for (const auto& f : fs) out = out * f;
  return out;
}

}  // namespace

Presentation build_presentation(const LabelledTree& lt) {
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");
  const RootedTree& t = lt.tree;
  Presentation p;
  p.lt = lt;
  p.variables = {VarId::h(), VarId::x0()};
  for (const auto& e : t.parents_set()) {
    p.variables.push_back(node_var(t, e));
    p.gens0.emplace(e, Poly::var(VarId::h()) * Poly::var(node_var(t, e)) - q_poly(lt, e));
  }
  for (const auto& e : t.parents_set()) {
    for (const auto& a : t.ancestors(e)) {
      const NodeId mid = t.child_on_path(a, e);
      Poly delta = Poly::linear(parent_var(t, a), lt.label(mid)) * Poly::var(node_var(t, e)) -
                   Poly::var(node_var(t, a)) * q_rel(lt, a, e);
      p.gensA.emplace(std::make_pair(a, e), std::move(delta));
    }
  }
  return p;
}

std::vector<Generator> Presentation::generators() const {
  const RootedTree& t = tree();
  std::vector<Generator> out;
  for (const auto& e : t.parents_set()) {
    Generator g;
    g.name = "D0_" + e;
    g.poly = gens0.at(e);
    g.lhs = {Poly::var(VarId::h()), Poly::var(node_var(t, e))};
    g.rhs = q_factors(lt, e, 0);
    out.push_back(std::move(g));
  }
  for (const auto& e : t.parents_set()) {
    for (const auto& a : t.ancestors(e)) {
      const NodeId mid = t.child_on_path(a, e);
      Generator g;
      g.name = "D_" + a + "_" + e;
      g.poly = gensA.at({a, e});
      g.lhs = {Poly::linear(parent_var(t, a), lt.label(mid)), Poly::var(node_var(t, e))};
      g.rhs = q_factors(lt, e, t.level(mid));
      g.rhs.insert(g.rhs.begin(), Poly::var(node_var(t, a)));
      out.push_back(std::move(g));
    }
  }
  for (const auto& g : out) {
    if (product(g.lhs) - product(g.rhs) != g.poly) {
      throw Error(ErrorCode::kInvalidArgument, "factored form of " + g.name + " is inconsistent");
    }
  }
  return out;
}

std::pair<Poly, Poly> matrix_column(const Presentation& p, const std::optional<NodeId>& e) {
  if (!e) return {Poly::var(VarId::h()), Poly(1)};
  return {q_poly(p.lt, *e), Poly::var(node_var(p.tree(), *e))};
}

Poly column_det(const std::pair<Poly, Poly>& a, const std::pair<Poly, Poly>& b) {
  return a.first * b.second - b.first * a.second;
}

CheckReport syzygy_check(const Presentation& p) {
  CheckReport r{"syzygy", 0, {}};
  const RootedTree& t = p.tree();
  const Poly h = Poly::var(VarId::h());
  for (const auto& [key, delta] : p.gensA) {
    const auto& [a, e] = key;
    const NodeId mid = t.child_on_path(a, e);
    const Poly rhs = Poly::linear(parent_var(t, a), p.lt.label(mid)) * p.gens0.at(e) -
                     q_rel(p.lt, a, e) * p.gens0.at(a);
    r.expect(h * delta == rhs, "syzygy fails for (" + a + ", " + e + ")");
  }
  return r;
}

CheckReport minor_check(const Presentation& p) {
  CheckReport r{"minors", 0, {}};
  const RootedTree& t = p.tree();
  for (const auto& [e, delta] : p.gens0) {
    r.expect(column_det(matrix_column(p, std::nullopt), matrix_column(p, e)) == delta,
             "det(M_0, M_" + e + ") differs from D0_" + e);
  }
  for (const auto& [key, delta] : p.gensA) {
    const auto& [a, e] = key;
    const Poly det = column_det(matrix_column(p, a), matrix_column(p, e));
    const auto quotient = try_divide_exact(det, root_poly(p.lt, t.child_on_path(a, e)));
    r.expect(quotient && *quotient == delta, "det(M_" + a + ", M_" + e + ") / R differs from D_" + a + "_" + e);
  }
  return r;
}

MinorCertificate incomparable_minor(const Presentation& p, const NodeId& g1, const NodeId& g2) {
  const RootedTree& t = p.tree();
  if (g1 == g2 || t.is_ancestor(g1, g2) || t.is_ancestor(g2, g1)) {
    throw Error(ErrorCode::kComparable, "'" + g1 + "' and '" + g2 + "' are comparable");
  }
  MinorCertificate c;
  c.meet = t.first_common_ancestor(g1, g2);
  const NodeId e1 = t.child_on_path(c.meet, g1);
  const NodeId e2 = t.child_on_path(c.meet, g2);
  c.divisor = root_poly(p.lt, c.meet) * sibling_poly(p.lt, c.meet, {e1, e2});
  c.minor = divide_exact(column_det(matrix_column(p, g1), matrix_column(p, g2)), c.divisor);
  c.q1 = q_rel(p.lt, c.meet, g1);
  c.q2 = q_rel(p.lt, c.meet, g2);
  c.verified = c.minor == c.q1 * p.gensA.at({c.meet, g2}) - c.q2 * p.gensA.at({c.meet, g1});
  return c;
}

CheckReport incomparable_check(const Presentation& p) {
  CheckReport r{"incomparable-minors", 0, {}};
  const auto internal = p.tree().parents_set();
  for (std::size_t i = 0; i < internal.size(); ++i) {
    for (std::size_t j = i + 1; j < internal.size(); ++j) {
      const auto& a = internal[i];
      const auto& b = internal[j];
      if (p.tree().is_ancestor(a, b) || p.tree().is_ancestor(b, a)) continue;
      bool ok = false;
      try {
        ok = incomparable_minor(p, a, b).verified;
      } catch (const Error&) {
        ok = false;
      }
      r.expect(ok, "certificate fails for (" + a + ", " + b + ")");
    }
  }
  return r;
}

}  // namespace gds
