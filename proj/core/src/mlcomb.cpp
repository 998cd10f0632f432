#include "gds/mlcomb.hpp"

#include <algorithm>
#include <numeric>

#include "gds/error.hpp"

namespace gds {

namespace {

std::vector<NodeId> chain(const LabelledTree& lt) {
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");
  const RootedTree& t = lt.tree;
  if (!t.is_comb() || t.height() == 0) throw Error(ErrorCode::kNotAComb, "internal nodes do not form a nonempty chain");
  return t.parents_set();
}

Poly in_t(const LabelledTree& lt, const NodeId& e) {
  Poly out(1);
  for (const auto& c : lt.tree.children(e)) out = out * Poly::linear(VarId::t(), lt.label(c));
  return out;
}

Poly at(const Poly& p, VarId v) { return substitute(p, {{VarId::t(), Poly::var(v)}}); }

Poly product(const std::vector<Poly>& fs) {
  Poly out(1);
  for (const auto& f : fs) out = out * f;
  return out;
}

}  // namespace

bool ml_trivial(const LabelledTree& lt) {
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");
  return lt.tree.is_comb();
}

CombNormalForm comb_normal_form(const LabelledTree& lt) {
  const auto nodes = chain(lt);
  const RootedTree& t = lt.tree;
  CombNormalForm nf;
  nf.n = static_cast<int>(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CombPolynomial cp;
    cp.p = in_t(lt, nodes[i]);
    if (i + 1 < nodes.size()) {
      cp.root = lt.label(nodes[i + 1]);
    } else {
      const auto& cs = t.children(nodes[i]);
      cp.root = lt.label(*std::min_element(cs.begin(), cs.end(), [&](const NodeId& a, const NodeId& b) {
        return lt.label(a) < lt.label(b);
      }));
    }
    cp.cofactor = divide_exact(cp.p, Poly::linear(VarId::t(), cp.root));
    nf.polys.push_back(std::move(cp));
  }
  return nf;
}

std::vector<VarId> comb_variables(int n) {
  std::vector<VarId> out{VarId::sym("x")};
  for (int k = 1; k <= n + 1; ++k) out.push_back(VarId::sym("y_" + std::to_string(k), k));
  return out;
}

std::vector<Generator> comb_equations(const CombNormalForm& nf) {
  const auto vars = comb_variables(nf.n);
  auto y = [&](int k) { return vars[static_cast<std::size_t>(k)]; };
  auto tail = [&](int from, int i) {
    std::vector<Poly> fs;
    for (int k = from; k < i; ++k) {
      Poly f = at(nf.polys[static_cast<std::size_t>(k - 1)].cofactor, y(k));
      if (f != Poly(1)) fs.push_back(std::move(f));
    }
    fs.push_back(at(nf.polys[static_cast<std::size_t>(i - 1)].p, y(i)));
    return fs;
  };
  std::vector<Generator> out;
  for (int i = 1; i <= nf.n; ++i) {
    Generator g;
    g.name = "C_" + std::to_string(i);
    g.lhs = {Poly::var(vars[0]), Poly::var(y(i + 1))};
    g.rhs = tail(1, i);
    g.poly = product(g.lhs) - product(g.rhs);
    out.push_back(std::move(g));
  }
  for (int i = 2; i <= nf.n; ++i) {
    for (int j = 2; j <= i; ++j) {
      Generator g;
      g.name = "C_" + std::to_string(j) + "_" + std::to_string(i);
      g.lhs = {Poly::linear(y(j - 1), nf.polys[static_cast<std::size_t>(j - 2)].root), Poly::var(y(i + 1))};
      g.rhs = tail(j, i);
      g.rhs.insert(g.rhs.begin(), Poly::var(y(j)));
      g.poly = product(g.lhs) - product(g.rhs);
      out.push_back(std::move(g));
    }
  }
  return out;
}

Substitution comb_renaming(const LabelledTree& lt) {
  const auto nodes = chain(lt);
  const auto vars = comb_variables(static_cast<int>(nodes.size()));
  Substitution s{{vars[0], Poly::var(VarId::h())}, {vars[1], Poly::var(VarId::x0())}};
  for (std::size_t k = 0; k < nodes.size(); ++k) s[vars[k + 2]] = Poly::var(node_var(lt.tree, nodes[k]));
  return s;
}

CheckReport comb_presentation_check(const LabelledTree& lt) {
  CheckReport r{"comb-normal-form", 0, {}};
  const auto nf = comb_normal_form(lt);
  const auto s = comb_renaming(lt);
  const auto eqs = comb_equations(nf);
  const auto gens = build_presentation(lt).generators();
  const auto n = static_cast<std::size_t>(nf.n);
  r.expect(eqs.size() == n + n * (n - 1) / 2, "equation count differs from n + n(n-1)/2");
  r.expect(eqs.size() == gens.size(), "equation count differs from the generator count");
  std::vector<bool> used(gens.size(), false);
  for (const auto& eq : eqs) {
    const Poly renamed = substitute(eq.poly, s);
    bool found = false;
    for (std::size_t i = 0; i < gens.size() && !found; ++i) {
      if (!used[i] && gens[i].poly == renamed) used[i] = found = true;
    }
    r.expect(found, eq.name + " has no matching generator after renaming");
  }
  return r;
}

std::optional<DanielewskiForm> ordinary_danielewski_form(const LabelledTree& lt) {
  if (!is_fine(lt)) throw Error(ErrorCode::kNotFine, "labelling is not fine");
  const RootedTree& t = lt.tree;
  if (!t.is_comb() || !t.leaves_same_level() || t.height() == 0) return std::nullopt;
  const auto nodes = t.parents_set();
  return DanielewskiForm{static_cast<int>(nodes.size()), in_t(lt, nodes.back())};
}

Poly danielewski_surface(const Poly& p) {
  const VarId x = VarId::sym("x");
  const VarId y = VarId::sym("y");
  const VarId z = VarId::sym("z");
  return Poly::var(x) * Poly::var(z) - at(p, y);
}

CheckReport collapsed_surface_check(const LabelledTree& lt, const std::vector<ChartExpansion>& charts) {
  CheckReport r{"collapsed-surface", 0, {}};
  const auto form = ordinary_danielewski_form(lt);
  if (!form) return r;
  const RootedTree& t = lt.tree;
  const auto nodes = t.parents_set();
  const VarId yv = nodes.size() >= 2 ? node_var(t, nodes[nodes.size() - 2]) : VarId::x0();
  const VarId zv = node_var(t, nodes.back());
  const Substitution s{{VarId::sym("x"), Poly::var(VarId::h())},
                       {VarId::sym("y"), Poly::var(yv)},
                       {VarId::sym("z"), Poly::var(zv)}};
  const Poly surface = substitute(danielewski_surface(form->p), s);
  for (const auto& c : charts) {
    r.expect(substitute(surface, c.expansion).is_zero(),
             "x z - P(y) does not vanish on the chart of '" + c.leaf + "'");
  }
  return r;
}

QHPData qhp_quotient_data(int m, int n, int q) {
  if (m < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "m and n must be positive");
  if (m % n != 0) {
    throw Error(ErrorCode::kDivisibilityViolation, std::to_string(n) + " does not divide " + std::to_string(m));
  }
  if (std::gcd(q, m / n) != 1) {
    throw Error(ErrorCode::kGcdViolation,
                "gcd(" + std::to_string(q) + ", " + std::to_string(m / n) + ") is not 1");
  }
  auto residue = [m](long long v) { return static_cast<int>(((v % m) + m) % m); };
  QHPData d;
  d.m = m;
  d.n = n;
  d.q = q;
  const VarId x = VarId::sym("x");
  const VarId t = VarId::sym("t");
  const VarId z = VarId::sym("z");
  d.surface = Poly::var(x) * Poly::var(z) - (Poly::var(t, static_cast<std::uint32_t>(n)) - Poly(1));
  d.action_exponents = {residue(1), residue(q), residue(-1)};
  d.invariance_residue = residue(static_cast<long long>(q) * n);
  d.invariant = d.invariance_residue == 0;
  return d;
}

}  // namespace gds
